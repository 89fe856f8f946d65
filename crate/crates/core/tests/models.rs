use lmu_core::algebra::{
    check_axioms, check_extensional, check_standard, pool_valuation, Decomposition, SclSampler,
    StreamCombinatoryAlgebra, TermModel, TrivialAlgebra,
};
use lmu_core::scl::{SclConst, SclStream, SclTerm};
use lmu_core::Verdict;

/// The term model with K0 and K1 swapped; the K laws must be refuted.
struct SwappedK(TermModel);

impl StreamCombinatoryAlgebra for SwappedK {
    type Elem = SclTerm;
    type Stream = SclStream;

    fn app(&self, d: &SclTerm, e: &SclTerm) -> SclTerm {
        self.0.app(d, e)
    }
    fn sapp(&self, d: &SclTerm, s: &SclStream) -> SclTerm {
        self.0.sapp(d, s)
    }
    fn cons(&self, d: &SclTerm, s: &SclStream) -> SclStream {
        self.0.cons(d, s)
    }
    fn constant(&self, c: SclConst) -> SclTerm {
        let swapped = match c {
            SclConst::K0 => SclConst::K1,
            SclConst::K1 => SclConst::K0,
            other => other,
        };
        self.0.constant(swapped)
    }
    fn elem_eq(&self, d: &SclTerm, e: &SclTerm) -> Verdict {
        self.0.elem_eq(d, e)
    }
    fn stream_eq(&self, s: &SclStream, t: &SclStream) -> Verdict {
        self.0.stream_eq(s, t)
    }
    fn uncons(&self, s: &SclStream) -> Decomposition<SclTerm, SclStream> {
        self.0.uncons(s)
    }
}

fn canonical() -> lmu_core::algebra::Valuation<SclTerm, SclStream> {
    use lmu_core::gen::{STREAM_POOL, TERM_POOL};
    use lmu_core::lm::{StreamVar, TermVar};
    let ts: Vec<_> = TERM_POOL.iter().map(TermVar::new).collect();
    let ss: Vec<_> = STREAM_POOL.iter().map(StreamVar::new).collect();
    TermModel::canonical_valuation(&ts, &ss)
}

#[test]
fn swapped_constants_are_caught() {
    let alg = SwappedK(TermModel::default());
    let mut s = SclSampler::new(11, 6, canonical());
    let r = check_axioms(&alg, &mut s, 20);
    assert!(r.row("K0").unwrap().fail > 0, "{r}");
    assert!(r.row("K1").unwrap().fail > 0, "{r}");
    assert_eq!(r.row("S0").unwrap().fail, 0, "{r}");
    assert!(r.notes.iter().any(|n| n.contains("K0")), "{r}");
}

#[test]
fn term_model_passes_and_is_not_standard() {
    let tm = TermModel::default();
    let r = check_axioms(&tm, &mut SclSampler::term_model(3, 8), 50);
    assert_eq!(r.failures(), 0, "{r}");
    let text = r.to_string();
    assert!(text.starts_with("# axioms seed=3 n=50\nlaw\tpass\tfail\tunknown\n"));

    let e = check_extensional(&tm, &mut SclSampler::term_model(3, 6), 20);
    assert_eq!(e.failures(), 0, "{e}");

    let st = check_standard(&tm, &mut SclSampler::term_model(3, 6), 20);
    assert!(st.notes.iter().any(|n| n.contains("not standard")), "{st}");
}

#[test]
fn trivial_algebra_satisfies_everything() {
    let alg = TrivialAlgebra;
    let mut s = SclSampler::new(1, 8, pool_valuation((), ()));
    assert_eq!(check_axioms(&alg, &mut s, 30).failures(), 0);
    let st = check_standard(&alg, &mut s, 10);
    assert_eq!(st.failures(), 0, "{st}");
}
