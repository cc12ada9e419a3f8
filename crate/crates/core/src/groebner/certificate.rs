use std::fmt;

use crate::polyring::Polynomial;

/// Cofactor identity `target = Σ cofactors[i]·generators[i]`.
///
/// Checking it needs nothing but polynomial arithmetic; no Gröbner basis
/// is involved in [`Certificate::verify`].
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub target: Polynomial,
    pub generators: Vec<Polynomial>,
    pub cofactors: Vec<Polynomial>,
}

impl Certificate {
    pub fn new(target: Polynomial, generators: Vec<Polynomial>, cofactors: Vec<Polynomial>) -> Self {
        assert_eq!(generators.len(), cofactors.len(), "one cofactor per generator");
        Certificate { target, generators, cofactors }
    }

    /// `Σ cofactors[i]·generators[i]`
    pub fn expand(&self) -> Polynomial {
        self.generators.iter().zip(&self.cofactors).fold(self.target.ring().zero(), |acc, (g, c)| acc + c * g)
    }

    pub fn verify(&self) -> bool {
        self.generators.len() == self.cofactors.len() && self.expand() == self.target
    }

    /// Same identity for `-target`.
    pub fn negate(&self) -> Certificate {
        Certificate {
            target: -&self.target,
            generators: self.generators.clone(),
            cofactors: self.cofactors.iter().map(|c| -c).collect(),
        }
    }
}

/// `target = (c1)*(g1) + (c2)*(g2) + ...`, skipping zero cofactors; the
/// right-hand side parses back with the polynomial grammar.
impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = ", self.target)?;
        let mut any = false;
        for (g, c) in self.generators.iter().zip(&self.cofactors) {
            if c.is_zero() {
                continue;
            }
            if any {
                write!(f, " + ")?;
            }
            any = true;
            write!(f, "({c})*({g})")?;
        }
        if !any {
            write!(f, "0")?;
        }
        Ok(())
    }
}
