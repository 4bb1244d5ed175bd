//! Uniform morphisms, the synchronizing property, and a mechanical check
//! that the image of a quaternary `7/5⁺`-free word under the built-in
//! morphism `h` is `(3/2⁺, 2)`-free.

use std::fmt;

use crate::checker::IncrementalChecker;
use crate::error::{Error, Result};
use crate::exponent::{ExactInt, Exponent};
use crate::period::Witness;
use crate::search::{grow, Budget, GrowResult};
use crate::spec::FreenessSpec;
use crate::word::{check_alphabet, Letter, Word};

/// Images of the built-in morphism `h : {0,1,2,3}* → {0,1,2}*`.
pub const H_IMAGES: [&str; 4] = ["000211", "101221", "020011", "120221"];

/// Spec the source word of the built-in construction avoids.
pub const H_SOURCE_SPEC: &str = "7/5+ @ 1";
/// Spec the image of the built-in construction is checked against.
pub const H_IMAGE_SPEC: &str = "3/2+ @ 2";

/// A letter-to-word map from `{0..k_src}` to words over `{0..k_dst}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    k_dst: usize,
    images: Vec<Word>,
}

impl Morphism {
    pub fn new(k_dst: usize, images: Vec<Word>) -> Result<Morphism> {
        check_alphabet(k_dst)?;
        check_alphabet(images.len())
            .map_err(|_| Error::BadMorphism(format!("{} source letters", images.len())))?;
        for (a, img) in images.iter().enumerate() {
            if img.is_empty() {
                return Err(Error::BadMorphism(format!("image of {a} is empty")));
            }
            if let Some(&bad) = img.letters().iter().find(|&&x| x as usize >= k_dst) {
                return Err(Error::LetterOutOfRange {
                    letter: bad,
                    alphabet_size: k_dst,
                });
            }
        }
        let images = images
            .into_iter()
            .map(|w| Word::from_raw(k_dst, w.into_letters()))
            .collect();
        Ok(Morphism { k_dst, images })
    }

    /// Builds a morphism from base-36 image strings; the target alphabet is
    /// the smallest one containing every image letter.
    pub fn from_images(images: &[&str]) -> Result<Morphism> {
        let words = images
            .iter()
            .map(|s| Word::parse(crate::word::MAX_ALPHABET, s))
            .collect::<Result<Vec<_>>>()?;
        let k_dst = words
            .iter()
            .flat_map(|w| w.letters())
            .map(|&a| a as usize + 1)
            .max();
        Morphism::new(k_dst.unwrap_or(1), words)
    }

    /// The built-in morphism `h`.
    pub fn h() -> Morphism {
        Morphism::from_images(&H_IMAGES).expect("built-in morphism is valid")
    }

    pub fn builtin(name: &str) -> Option<Morphism> {
        match name {
            "h" => Some(Morphism::h()),
            _ => None,
        }
    }

    /// Parses lines of the form `LETTER -> IMAGE`. Blank lines and lines
    /// starting with `#` are skipped; the letters must cover `0..k_src`
    /// exactly once.
    pub fn parse(text: &str) -> Result<Morphism> {
        let mut slots: Vec<Option<String>> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (src, img) = line.split_once("->").ok_or_else(|| {
                Error::BadMorphism(format!("expected \"LETTER -> IMAGE\": {line:?}"))
            })?;
            let src = src.trim();
            let mut chars = src.chars();
            let letter = match (chars.next(), chars.next()) {
                (Some(c), None) => Letter::from_char(c)?.value() as usize,
                _ => return Err(Error::BadMorphism(format!("bad source letter {src:?}"))),
            };
            if slots.len() <= letter {
                slots.resize(letter + 1, None);
            }
            if slots[letter].replace(img.trim().to_string()).is_some() {
                return Err(Error::BadMorphism(format!("letter {src} defined twice")));
            }
        }
        if slots.is_empty() {
            return Err(Error::BadMorphism("no images".into()));
        }
        let images = slots
            .into_iter()
            .enumerate()
            .map(|(a, s)| s.ok_or_else(|| Error::BadMorphism(format!("letter {a} missing"))))
            .collect::<Result<Vec<_>>>()?;
        let refs: Vec<&str> = images.iter().map(String::as_str).collect();
        Morphism::from_images(&refs)
    }

    pub fn source_size(&self) -> usize {
        self.images.len()
    }

    pub fn target_size(&self) -> usize {
        self.k_dst
    }

    pub fn image(&self, a: Letter) -> &Word {
        &self.images[a.value() as usize]
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        let mut out = Vec::new();
        for &a in w.letters() {
            let img = self.images.get(a as usize).ok_or(Error::LetterOutOfRange {
                letter: a,
                alphabet_size: self.images.len(),
            })?;
            out.extend_from_slice(img.letters());
        }
        Ok(Word::from_raw(self.k_dst, out))
    }

    /// Common image length, if all images share one.
    pub fn uniform_width(&self) -> Option<usize> {
        let w = self.images[0].len();
        self.images.iter().all(|img| img.len() == w).then_some(w)
    }

    /// Tests every placement of an image `m(c)` inside every `m(ab)`. A
    /// placement is fine only when it is the aligned copy of `a` or of `b`.
    pub fn check_synchronizing(&self) -> Result<SyncReport> {
        let width = self.uniform_width().ok_or(Error::NotUniform)?;
        let n = self.images.len();
        let mut counterexamples = Vec::new();
        let mut pair = Vec::with_capacity(2 * width);
        for a in 0..n {
            for b in 0..n {
                pair.clear();
                pair.extend_from_slice(self.images[a].letters());
                pair.extend_from_slice(self.images[b].letters());
                for c in 0..n {
                    for offset in 0..=width {
                        if &pair[offset..offset + width] != self.images[c].letters() {
                            continue;
                        }
                        let aligned = (offset == 0 && a == c) || (offset == width && b == c);
                        if !aligned {
                            counterexamples.push(SyncCounterexample {
                                a: Letter(a as u8),
                                b: Letter(b as u8),
                                c: Letter(c as u8),
                                offset,
                            });
                        }
                    }
                }
            }
        }
        Ok(SyncReport {
            synchronizing: counterexamples.is_empty(),
            counterexamples,
            triples: n * n * n,
            offsets: width + 1,
        })
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, img) in self.images.iter().enumerate() {
            writeln!(f, "{} -> {}", Letter(a as u8).to_char(), img)?;
        }
        Ok(())
    }
}

/// `m(c)` found at `offset` inside `m(ab)` without being aligned with `a`
/// or `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SyncCounterexample {
    pub a: Letter,
    pub b: Letter,
    pub c: Letter,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyncReport {
    pub synchronizing: bool,
    pub counterexamples: Vec<SyncCounterexample>,
    /// Number of `(a, b, c)` triples examined.
    pub triples: usize,
    /// Offsets examined per triple.
    pub offsets: usize,
}

/// Checks, for every root length `x` in `min_root..=max_root`, every
/// `y < x` and every trimmed amount `t ≤ max_trim`, that
/// `1 + (x − t)/(x + y) > bound`. This is the exponent a repetition in the
/// image forces on the source word once its aligned part is pulled back.
pub fn exponent_transfer_holds<T: ExactInt>(
    bound: &Exponent<T>,
    min_root: usize,
    max_root: usize,
    max_trim: usize,
) -> bool {
    (min_root.max(1)..=max_root).all(|x| {
        (0..x).all(|y| {
            (0..=max_trim.min(x)).all(|t| {
                // 1 + (x−t)/(x+y) > n/d  ⇔  d·(x−t) > (n−d)·(x+y)
                let lhs = T::from_usize(x - t).unwrap() * bound.den().clone();
                let rhs =
                    (bound.num().clone() - bound.den().clone()) * T::from_usize(x + y).unwrap();
                lhs > rhs
            })
        })
    })
}

/// Outcome of checking the image of a long source word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageReport {
    pub source: Word,
    pub image: Word,
    /// First forbidden factor met in the image, if any.
    pub witness: Option<Witness>,
    /// Whether [`exponent_transfer_holds`] held over the checked range.
    pub transfer_bound_holds: bool,
}

impl ImageReport {
    pub fn success(&self) -> bool {
        self.witness.is_none() && self.transfer_bound_holds
    }
}

/// Builds a `7/5⁺`-free quaternary word of length `n` by depth-first
/// search, maps it through `h`, and checks the image against `3/2⁺ @ 2`
/// with the incremental checker.
pub fn verify_ternary_image(n: usize, budget: Budget) -> Result<ImageReport> {
    let h = Morphism::h();
    let src_spec: FreenessSpec = H_SOURCE_SPEC.parse().expect("built-in spec");
    let img_spec: FreenessSpec = H_IMAGE_SPEC.parse().expect("built-in spec");
    let source = if n == 0 {
        Word::empty(h.source_size())?
    } else {
        match grow(h.source_size(), &src_spec, n, budget)? {
            GrowResult::Found(w) => w,
            GrowResult::Exhausted { max_len_reached } => {
                return Err(Error::SearchExhausted {
                    max_len: max_len_reached,
                })
            }
            GrowResult::BudgetExceeded { nodes_visited } => {
                return Err(Error::BudgetExceeded { nodes_visited })
            }
        }
    };
    let image = h.apply(&source)?;
    let mut checker = IncrementalChecker::new(h.target_size(), img_spec)?;
    let witness = checker.push_word(&image)?;
    // roots of 50 and up are covered by the transfer argument; check it over
    // every root length the image can hold
    let max_root = image.len().clamp(50, 1000);
    let transfer_bound_holds = exponent_transfer_holds(src_spec.alpha(), 50, max_root, 10);
    Ok(ImageReport {
        source,
        image,
        witness,
        transfer_bound_holds,
    })
}

/// Enumerates every `src_spec`-free source word up to the length whose
/// image covers all factors that a repetition with period below
/// `max_root` can need, and reports each `image_spec` violation with a
/// period in `[ℓ, max_root)`.
///
/// Images are checked incrementally along the enumeration, so a hit is
/// reported once, with the shortest source prefix whose image contains it;
/// longer extensions of that prefix are not descended into. Fails with
/// [`Error::CapExceeded`] once more than `cap` source words were visited.
pub fn small_case_scan<T: ExactInt>(
    m: &Morphism,
    src_spec: &FreenessSpec<T>,
    image_spec: &FreenessSpec<T>,
    max_root: usize,
    cap: u64,
) -> Result<Vec<(Word, Witness)>> {
    let width = m.uniform_width().ok_or(Error::NotUniform)?;
    if max_root < 2 {
        return Err(Error::BadMorphism("max_root must be at least 2".into()));
    }
    let source_len = source_window(image_spec.alpha(), max_root, width);
    let k = m.source_size();
    let mut src = IncrementalChecker::new(k, src_spec.clone())?;
    let mut img = IncrementalChecker::new(m.target_size(), image_spec.clone())?;
    let mut found = Vec::new();
    let mut visited = 0u64;
    let mut next: Vec<u8> = vec![0];

    while let Some(top) = next.last_mut() {
        let a = *top;
        if a as usize == k {
            next.pop();
            if !src.is_empty() {
                src.pop();
                for _ in 0..width {
                    img.pop();
                }
            }
            continue;
        }
        *top += 1;
        if src.probe(Letter(a)).is_some() {
            continue;
        }
        visited += 1;
        if visited > cap {
            return Err(Error::CapExceeded { cap });
        }
        src.push(Letter(a));
        let mut hit = None;
        for b in m.image(Letter(a)).iter() {
            if let Some(w) = img.push(b) {
                if w.period < max_root && hit.is_none() {
                    hit = Some(w);
                }
            }
        }
        if let Some(w) = hit {
            found.push((src.word(), w));
        } else if src.len() < source_len {
            next.push(0);
            continue;
        }
        src.pop();
        for _ in 0..width {
            img.pop();
        }
    }
    Ok(found)
}

/// `⌈α·max_root / width⌉ + 2` source letters.
fn source_window<T: ExactInt>(alpha: &Exponent<T>, max_root: usize, width: usize) -> usize {
    let num = alpha.num().clone() * T::from_usize(max_root).unwrap();
    let den = alpha.den().clone() * T::from_usize(width).unwrap();
    num.div_ceil(&den)
        .to_usize()
        .unwrap_or(usize::MAX)
        .saturating_add(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::period::scan;

    #[test]
    fn h_images() {
        let h = Morphism::h();
        assert_eq!(h.source_size(), 4);
        assert_eq!(h.target_size(), 3);
        assert_eq!(
            h.apply(&Word::parse(4, "0").unwrap()).unwrap().to_string(),
            "000211"
        );
        assert_eq!(
            h.apply(&Word::parse(4, "3").unwrap()).unwrap().to_string(),
            "120221"
        );
        assert!(h.apply(&Word::empty(4).unwrap()).unwrap().is_empty());
        assert_eq!(h.uniform_width(), Some(6));
    }

    #[test]
    fn widths() {
        assert_eq!(
            Morphism::from_images(&["0"]).unwrap().uniform_width(),
            Some(1)
        );
        let m = Morphism::from_images(&["0", "01"]).unwrap();
        assert_eq!(m.uniform_width(), None);
        assert_eq!(m.check_synchronizing(), Err(Error::NotUniform));
    }

    #[test]
    fn synchronizing_examples() {
        let r = Morphism::h().check_synchronizing().unwrap();
        assert!(r.synchronizing);
        assert_eq!((r.triples, r.offsets), (64, 7));

        let r = Morphism::from_images(&["00", "01"])
            .unwrap()
            .check_synchronizing()
            .unwrap();
        assert!(!r.synchronizing);
        assert!(r.counterexamples.contains(&SyncCounterexample {
            a: Letter(0),
            b: Letter(0),
            c: Letter(0),
            offset: 1
        }));

        let r = Morphism::from_images(&["01"])
            .unwrap()
            .check_synchronizing()
            .unwrap();
        assert!(r.synchronizing);
    }

    #[test]
    fn parse_file_format() {
        let m =
            Morphism::parse("0 -> 000211\n1 -> 101221\n\n# c\n3 -> 120221\n2 -> 020011\n").unwrap();
        assert_eq!(m, Morphism::h());
        assert_eq!(Morphism::parse(&m.to_string()).unwrap(), m);
        assert!(Morphism::parse("0 -> 01\n0 -> 10").is_err());
        assert!(Morphism::parse("0 -> 01\n2 -> 10").is_err());
        assert!(Morphism::parse("0 = 01").is_err());
        assert!(Morphism::parse("").is_err());
        assert!(Morphism::parse("0 -> ").is_err());
    }

    #[test]
    fn transfer_inequality() {
        let seven_fifths: Exponent = "7/5".parse().unwrap();
        assert!(exponent_transfer_holds(&seven_fifths, 50, 200, 10));
        // x = 48, y = 47, t = 10: 5·38 = 2·95, not strict
        assert!(!exponent_transfer_holds(&seven_fifths, 48, 48, 10));
    }

    #[test]
    fn verify_small_lengths() {
        let r = verify_ternary_image(0, Budget::unlimited()).unwrap();
        assert!(r.success() && r.image.is_empty());
        let r = verify_ternary_image(1, Budget::unlimited()).unwrap();
        assert!(r.success());
        assert_eq!(r.image.len(), 6);
        // no single image has a period ≥ 2 factor above exponent 3/2
        let img_spec: FreenessSpec = H_IMAGE_SPEC.parse().unwrap();
        for img in H_IMAGES {
            assert_eq!(scan(&Word::parse(3, img).unwrap(), &img_spec), None);
        }
    }

    #[test]
    fn small_case_scan_short_window() {
        let src: FreenessSpec = H_SOURCE_SPEC.parse().unwrap();
        let img: FreenessSpec = H_IMAGE_SPEC.parse().unwrap();
        assert!(small_case_scan(&Morphism::h(), &src, &img, 4, 1_000_000)
            .unwrap()
            .is_empty());
        assert_eq!(source_window(img.alpha(), 100, 6), 27);
        assert_eq!(source_window(img.alpha(), 4, 6), 3);
    }

    #[test]
    fn small_case_scan_identity() {
        let id = Morphism::from_images(&["0", "1"]).unwrap();
        let src: FreenessSpec = "2/1 @ 1".parse().unwrap();
        let img: FreenessSpec = H_IMAGE_SPEC.parse().unwrap();
        assert!(small_case_scan(&id, &src, &img, 4, 1000)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn small_case_scan_reports_hits_and_cap() {
        // period-2 overlaps survive a 2+ source spec over the identity map
        let id = Morphism::from_images(&["0", "1"]).unwrap();
        let src: FreenessSpec = "2+ @ 1".parse().unwrap();
        let img: FreenessSpec = H_IMAGE_SPEC.parse().unwrap();
        let hits = small_case_scan(&id, &src, &img, 4, 1000).unwrap();
        assert!(!hits.is_empty());
        for (u, w) in &hits {
            assert!(w.is_valid_for(u, &img) && w.period < 4);
        }
        assert_eq!(
            small_case_scan(&Morphism::h(), &src, &img, 100, 10),
            Err(Error::CapExceeded { cap: 10 })
        );
    }
}
