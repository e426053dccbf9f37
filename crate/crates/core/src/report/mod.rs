//! Curve sampling, CSV/SVG export and the reproduction of the reference
//! tables.

mod curve;
mod svg;
mod tables;

pub use curve::{parse_curve_csv, sample_curve, write_curve_csv, CurveSample};
pub use svg::{render_curve_svg, SvgOptions, THRESHOLD_MARKER_ID};
pub use tables::{
    render_tables, table3_rows, table4_rows, Table3Row, Table4Row, MISMATCH_TAG, TABLE3_TOLERANCE,
    TABLE4_TOLERANCE,
};
