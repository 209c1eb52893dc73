//! Anchor strings attached to report records.

pub const SINGER_TOTAL: &str = "Conjecture 1";
pub const POLY_COUNTS: &str = "Eq. cardpmnimn";
pub const PSI_SURJECTIVE: &str = "Proposition 2.1";
pub const THETA_SURJECTIVE: &str = "Proposition 2.2";
pub const IRREDUCIBLE_FIBER: &str = "Conjecture 2.4";
pub const COPRIME_MONIC: &str = "Proposition 3.1";
pub const COPRIME_ALL: &str = "Proposition 3.2";
pub const SIGMA: &str = "Corollary 3.3";
pub const M2_BASES: &str = "Lemma 4.2";
pub const M2_CLASSES: &str = "Lemma 4.3";
pub const M2_FIBER: &str = "Theorem 4.4";
pub const FIBER_VIA_N: &str = "Eq. fiberandN";
pub const S_VIA_N: &str = "Corollary 5.4";
pub const SPLITTING: &str = "Conjecture 5.5";
pub const ELEMSPLIT_I: &str = "Proposition 5.6(i)";
pub const ELEMSPLIT_II: &str = "Proposition 5.6(ii)";
pub const ELEMSPLIT_III: &str = "Proposition 5.6(iii)";
pub const ELEMSPLIT_IV: &str = "Proposition 5.6(iv)";
pub const POINTED: &str = "Conjecture 5.7";
pub const NILPOTENT: &str = "Fine-Herstein count";
pub const BOUNDS: &str = "Lemma 6.1";
pub const L_STAR: &str = "Theorem 6.2";
pub const TOEPLITZ: &str = "Eq. TGLn";
pub const TRINOMIAL: &str = "Proposition 7.1";
pub const BINOMIAL: &str = "Proposition 7.2";
pub const FERMAT: &str = "Corollary 7.3";
