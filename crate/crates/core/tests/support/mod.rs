#![allow(dead_code)]

pub mod cosets;
pub mod gen;
pub mod murasugi;
pub mod naive;
