#![allow(clippy::needless_range_loop)]

pub mod category;
pub mod complex;
pub mod group;
pub mod intmat;
pub mod module;
pub mod poset;
pub mod table;
pub mod verify;
