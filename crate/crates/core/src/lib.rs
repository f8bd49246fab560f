pub mod classify;
pub mod enumerate;
pub mod numtheory;
pub mod packing;
