pub mod ext_field;
pub mod factor;
pub mod macaulay;
pub mod newton;
pub mod poly;
pub mod resultant;
pub mod ring;
pub mod serial;
pub mod series;
