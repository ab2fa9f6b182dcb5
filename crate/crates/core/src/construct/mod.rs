//! EAQECC constructions. Each returns a [`ConstructionReport`] whose numbers
//! are all computed from explicit matrices.

use crate::code::LinearCode;
use crate::error::Result;
use crate::field::Field;
use crate::linalg::{Form, Matrix};
use crate::params::eaqecc_from_hull;
use crate::report::{CodeFile, ConstructionReport};

pub mod extend;
pub mod grs_hull;
pub mod grs_mds;
pub mod lcd;
pub mod grs_families;

pub use extend::{
    extend_euclidean_multi, extend_euclidean_single, extend_hermitian_multi,
    extend_hermitian_single, extend_multi, extend_single,
};
pub use grs_hull::grs_hull_family;
pub use grs_mds::grs_mds_extend;
pub use lcd::{cyclic_mds_lcd, find_square_witnesses, lcd_maximal, lcd_s_expand, SquareKind};
pub use grs_families::{realize_candidate, grs_candidates, GrsCandidate};

/// Exponent `e` of the form: `a -> a^e` gives `a a^*`.
pub(crate) fn norm_exponent(field: &Field, form: Form) -> Result<u64> {
    Ok(match form {
        Form::Euclidean => 2,
        Form::Hermitian => field.hermitian_base()? as u64 + 1,
    })
}

/// `sum u_i v_i` or `sum u_i v_i^q`.
pub(crate) fn inner(field: &Field, form: Form, u: &[u32], v: &[u32]) -> u32 {
    let conj = match form {
        Form::Euclidean => 1,
        Form::Hermitian => field.hermitian_base().expect("checked quadratic") as u64,
    };
    u.iter()
        .zip(v)
        .fold(0, |acc, (&a, &b)| field.add(acc, field.mul(a, field.pow(b, conj))))
}

/// Least nonzero `a` with `a^e != -t`.
pub(crate) fn least_alpha(field: &Field, e: u64, t: u32) -> Option<u32> {
    let target = field.neg(t);
    (1..field.order()).find(|&a| field.pow(a, e) != target)
}

/// Code whose `form`-dual is spanned by the rows of `h`.
pub(crate) fn code_with_dual(h: &Matrix, form: Form) -> Result<LinearCode> {
    Ok(match form {
        Form::Euclidean => LinearCode::from_parity(h),
        Form::Hermitian => LinearCode::from_parity(&h.conjugate(h.field().hermitian_base()?)?),
    })
}

/// Stores the output code and its two hull-derived EAQECCs.
pub fn attach_output(
    report: &mut ConstructionReport,
    code: &LinearCode,
    form: Form,
    budget: u64,
) -> Result<()> {
    let (p, d) = eaqecc_from_hull(code, form, budget)?;
    report.output_code = Some(CodeFile::of(code));
    report.eaqecc = Some(p);
    report.eaqecc_dual = Some(d);
    Ok(())
}
