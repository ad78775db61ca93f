pub mod bounds;
pub mod covers;
pub mod exactalg;
pub mod exclusion;
pub mod curves;
pub mod json;
pub mod report;
pub mod weilsearch;
pub mod gfarith;
pub mod zeta;
