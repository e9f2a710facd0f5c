//! Rational tangle arithmetic: continued fractions, the fraction invariant,
//! and word normalization.
//!
//! The fraction of a word (a_1, ..., a_n) is the right-to-left continued
//! fraction a_n + 1/(a_{n-1} + 1/(... + 1/a_1)), evaluated projectively so
//! intermediate infinities are harmless. Two words denote the same slot
//! tangle when their fractions are equal or reciprocal; the canonical
//! representative of a slot class is the unique single-sign word whose
//! fraction has |numerator| >= |denominator|.

use crate::conway::RationalTangleWord;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A reduced projective rational p/q with q >= 0; q = 0 only for the
/// infinity tangle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TangleFraction {
    num: BigInt,
    den: BigInt,
}

impl TangleFraction {
    pub fn new(num: BigInt, den: BigInt) -> Self {
        assert!(
            !(num.is_zero() && den.is_zero()),
            "indeterminate fraction 0/0"
        );
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / &g, den / g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        if den.is_zero() {
            num = BigInt::one();
        }
        Self { num, den }
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigInt::from(n), BigInt::one())
    }

    pub fn infinity() -> Self {
        Self::new(BigInt::one(), BigInt::zero())
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn reciprocal(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Projective sum.
    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            &self.num * &other.den + &self.den * &other.num,
            &self.den * &other.den,
        )
    }
}

impl std::fmt::Display for TangleFraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Continued-fraction value of an entry sequence, folded from the innermost
/// entry: a_n + 1/(a_{n-1} + ... + 1/a_1). Zero entries are tolerated; the
/// projective arithmetic absorbs the intermediate infinities they cause.
pub fn fraction_of_entries(entries: &[i64]) -> TangleFraction {
    let mut it = entries.iter();
    let first = *it.next().expect("entry list is non-empty");
    let mut val = TangleFraction::from_int(first);
    for &a in it {
        // a + 1/val, projectively.
        let rec = val.reciprocal();
        val = rec.add(&TangleFraction::from_int(a));
    }
    val
}

/// Continued-fraction value of a word.
pub fn fraction(word: &RationalTangleWord) -> TangleFraction {
    fraction_of_entries(word.entries())
}

/// The fraction of the tangle a word denotes when it sits in a Montesinos
/// slot: the reciprocal of the word fraction.
pub fn slot_fraction(word: &RationalTangleWord) -> TangleFraction {
    fraction(word).reciprocal()
}

/// Total number of crossings the word spells.
pub fn crossing_count(word: &RationalTangleWord) -> u64 {
    word.entries().iter().map(|e| e.unsigned_abs()).sum()
}

/// True when every entry has the same sign, which is exactly when the
/// spelled diagram is alternating.
pub fn is_alternating_word(word: &RationalTangleWord) -> bool {
    word.entries().iter().all(|&e| e > 0) || word.entries().iter().all(|&e| e < 0)
}

/// Two words denote the same slot tangle when their fractions agree or are
/// reciprocal. This makes the notation identities 2- = (-2),
/// 21- = (-3) and 3- = (-2)(-1) hold exactly.
pub fn slot_equivalent(w1: &RationalTangleWord, w2: &RationalTangleWord) -> bool {
    let f1 = fraction(w1);
    let f2 = fraction(w2);
    f1 == f2 || f1 == f2.reciprocal()
}

/// Continued-fraction digits of p/q >= 1 (coprime, q >= 1), outermost digit
/// first. All digits are >= 1.
fn euclid_digits(p: &BigInt, q: &BigInt) -> Vec<BigInt> {
    let mut digits = Vec::new();
    let (mut p, mut q) = (p.clone(), q.clone());
    while !q.is_zero() {
        let (d, r) = p.div_rem(&q);
        digits.push(d);
        p = q;
        q = r;
    }
    digits
}

/// The canonical single-sign word of the slot class of `f`: the word whose
/// fraction is whichever of f, 1/f has |numerator| >= |denominator|.
/// Returns None for the zero and infinity tangles.
pub fn canonical_word_for_class(f: &TangleFraction) -> Option<RationalTangleWord> {
    if f.is_zero() || f.is_infinite() {
        return None;
    }
    let (p, q) = (f.numerator().abs(), f.denominator().abs());
    let (p, q) = if p >= q { (p, q) } else { (q, p) };
    let negative = f.numerator().is_negative();
    Some(word_from_digits(&euclid_digits(&p, &q), negative))
}

fn word_from_digits(digits: &[BigInt], negative: bool) -> RationalTangleWord {
    let entries: Vec<i64> = digits
        .iter()
        .rev()
        .map(|d| {
            let v = i64::try_from(d).expect("tangle entry exceeds i64");
            if negative {
                -v
            } else {
                v
            }
        })
        .collect();
    RationalTangleWord::new(entries).expect("euclid digits are nonzero")
}

/// Canonical single-sign form of a word (slot-class representative).
pub fn canonical_slot_word(word: &RationalTangleWord) -> Option<RationalTangleWord> {
    canonical_word_for_class(&fraction(word))
}

/// What a fraction refolds to as a 2-bridge closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Refold {
    /// |numerator| = 0: the two-component unlink, determinant zero.
    Unlink,
    /// |numerator| = 1: the unknot.
    Unknot,
    /// An alternating word w with fraction p/q', q' = q mod p, spelling the
    /// same 2-bridge link b(p, q).
    Word(RationalTangleWord),
}

/// Alternating word for the rational link with fraction `f`, using the
/// residue q mod p which leaves the 2-bridge class unchanged.
pub fn refold_fraction(f: &TangleFraction) -> Refold {
    if f.is_zero() {
        return Refold::Unlink;
    }
    if f.is_infinite() {
        return Refold::Unknot;
    }
    let p = f.numerator().abs();
    if p.is_one() {
        return Refold::Unknot;
    }
    let negative = f.numerator().is_negative();
    let q = f.denominator().mod_floor(&p);
    debug_assert!(!q.is_zero(), "q mod p = 0 contradicts gcd(p, q) = 1");
    Refold::Word(word_from_digits(&euclid_digits(&p, &q), negative))
}

/// Entry list for smoothing out the single crossing between two adjacent
/// slots of a Montesinos row: the outermost twist blocks of the two words
/// merge and the second word unfolds in reverse. Entries may cancel to
/// zero; feed the result to [`fraction_of_entries`].
pub fn merged_entries(a: &RationalTangleWord, b: &RationalTangleWord) -> Vec<i64> {
    let ae = a.entries();
    let be = b.entries();
    let mut out: Vec<i64> = ae[..ae.len() - 1].to_vec();
    out.push(ae[ae.len() - 1] + be[be.len() - 1]);
    out.extend(be[..be.len() - 1].iter().rev());
    out
}

/// Fraction of the rational tangle obtained by merging two slots.
pub fn merge_fraction(a: &RationalTangleWord, b: &RationalTangleWord) -> TangleFraction {
    fraction_of_entries(&merged_entries(a, b))
}
