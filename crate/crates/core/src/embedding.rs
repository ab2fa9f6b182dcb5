//! Embedding of GF(p^a) into GF(p^b) for a | b.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;

/// Sends the generator `x` of the small field to the least-encoding root of
/// the small modulus inside the big field.
#[derive(Clone, Debug)]
pub struct Embedding {
    small: Field,
    big: Field,
    image: Vec<u32>,
    preimage: Vec<Option<u32>>,
}

impl Embedding {
    pub fn new(small: &Field, big: &Field) -> Result<Embedding> {
        if small.characteristic() != big.characteristic() || !big.degree().is_multiple_of(small.degree()) {
            return Err(Error::DimensionMismatch(format!(
                "{small} does not embed in {big}"
            )));
        }
        let modulus = Poly::raw(big, small.modulus().to_vec());
        let root = (0..big.order())
            .find(|&r| modulus.eval(r) == 0)
            .expect("finite field contains every subfield");
        let p = small.characteristic();
        let mut image = Vec::with_capacity(small.order() as usize);
        let mut preimage = vec![None; big.order() as usize];
        for code in 0..small.order() {
            let (mut c, mut acc, mut pw) = (code, 0u32, 1u32);
            while c > 0 {
                acc = big.add(acc, big.mul(c % p, pw));
                pw = big.mul(pw, root);
                c /= p;
            }
            image.push(acc);
            preimage[acc as usize] = Some(code);
        }
        Ok(Embedding { small: small.clone(), big: big.clone(), image, preimage })
    }

    pub fn small(&self) -> &Field {
        &self.small
    }

    pub fn big(&self) -> &Field {
        &self.big
    }

    pub fn up(&self, a: u32) -> u32 {
        self.image[a as usize]
    }

    /// Preimage of a big-field element, if it lies in the subfield.
    pub fn down(&self, b: u32) -> Option<u32> {
        self.preimage[b as usize]
    }
}
