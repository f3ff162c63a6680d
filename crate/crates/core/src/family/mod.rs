pub mod count;
pub mod discriminant;
pub mod enumerate;
pub mod point;
pub mod smooth;

pub use count::point_count;
pub use discriminant::discriminant;
pub use enumerate::{box_count, enumerate};
pub use point::{FamilyPoint, PlaneQuarticForm, TrigonalAffineForm};
pub use smooth::{is_smooth, is_smooth_over_q};
