//! Deterministic instance families.
//!
//! A family fixes the ring sizes, the module shapes, and the sampling mode;
//! generators then enumerate cases in one canonical order (rings ascending,
//! then modules, submodules, and sets in their canonical orders), so suite
//! reports and searches are reproducible run to run.

use std::sync::Arc;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ideal::{enumerate_ideals, enumerate_mult_closed, ideal_spectrum, MultClosedSet};
use crate::module::{
    annihilator, enumerate_homs, enumerate_submodules, is_multiplication, Module, Submodule,
};
use crate::ring::Ring;
use crate::verify::case::{CaseData, ProductComponent};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModuleShapes {
    pub regular: bool,
    pub cyclic: bool,
    pub quotients: bool,
    pub direct_sums: bool,
}

impl ModuleShapes {
    pub fn basic() -> Self {
        ModuleShapes { regular: true, cyclic: true, quotients: false, direct_sums: false }
    }

    pub fn all() -> Self {
        ModuleShapes { regular: true, cyclic: true, quotients: true, direct_sums: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleMode {
    Exhaustive,
    /// Deterministic subsample of the exhaustive enumeration.
    Sampled { seed: u64, count: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFamily {
    pub name: String,
    pub max_ring: usize,
    pub max_module: usize,
    pub shapes: ModuleShapes,
    pub mode: SampleMode,
}

impl InstanceFamily {
    pub fn new(name: &str, max_ring: usize, max_module: usize, shapes: ModuleShapes) -> Self {
        InstanceFamily {
            name: name.into(),
            max_ring,
            max_module,
            shapes,
            mode: SampleMode::Exhaustive,
        }
    }

    /// The registered default family for a property.
    pub fn default_for(property: &str) -> InstanceFamily {
        match property {
            "thm1-equivalences" => InstanceFamily::new("zmod-rich", 8, 16, ModuleShapes::all()),
            "prop61-homs" => InstanceFamily::new("zmod-basic", 8, 8, ModuleShapes::basic()),
            "lemma16-product-ideals" | "thm17-product" => {
                InstanceFamily::new("product-pairs", 4, 4, ModuleShapes::basic())
            }
            "thm18-product3" => InstanceFamily::new("product-triples", 3, 3, ModuleShapes::basic()),
            "thm25-idealization" | "prop241-idealization-primary" | "rem24b-radical-law" => {
                InstanceFamily::new("idealizations", 4, 4, ModuleShapes::basic())
            }
            "thm31-domains" => InstanceFamily::new("prime-fields", 7, 8, ModuleShapes::basic()),
            "cor7-transfer" => InstanceFamily::new("zmod-small", 8, 8, ModuleShapes::basic()),
            _ => InstanceFamily::new("zmod-small", 8, 8, ModuleShapes::all()),
        }
    }

    pub fn with_max_ring(mut self, max_ring: usize) -> Self {
        self.max_ring = max_ring;
        self
    }

    pub fn with_max_module(mut self, max_module: usize) -> Self {
        self.max_module = max_module;
        self
    }
}

/// Base rings of the family: `Z/n` for `2 <= n <= max_ring`.
pub fn family_rings(family: &InstanceFamily, caps: &Caps) -> Result<Vec<Arc<Ring>>> {
    (2..=family.max_ring as u64)
        .map(|n| Ring::zmod(n, caps))
        .collect()
}

/// Modules of the requested shapes over one ring, in canonical order:
/// regular, then cyclic by ascending order, then quotients, then direct
/// sums.
pub fn family_modules(
    ring: &Arc<Ring>,
    family: &InstanceFamily,
    caps: &Caps,
) -> Result<Vec<Arc<Module>>> {
    let mut out: Vec<Arc<Module>> = Vec::new();
    let n = ring.card() as u64;
    if family.shapes.regular && ring.card() <= family.max_module {
        out.push(Module::regular(ring, caps)?);
    }
    let mut cyclics: Vec<Arc<Module>> = Vec::new();
    if family.shapes.cyclic {
        for d in 1..=n {
            if n.is_multiple_of(d) && d as usize <= family.max_module {
                cyclics.push(Module::cyclic_zmod(ring, d, caps)?);
            }
        }
    }
    out.extend(cyclics.iter().cloned());
    if family.shapes.quotients {
        let bases: Vec<Arc<Module>> = out.clone();
        for base in bases {
            for sub in enumerate_submodules(&base, caps)? {
                out.push(Module::quotient(&base, &sub, caps)?.0);
            }
        }
    }
    if family.shapes.direct_sums {
        let parts: Vec<Arc<Module>> = cyclics.iter().filter(|m| m.card() >= 2).cloned().collect();
        for a in &parts {
            for b in &parts {
                if a.card() * b.card() <= family.max_module {
                    out.push(Module::direct_sum(vec![Arc::clone(a), Arc::clone(b)], caps)?);
                }
            }
        }
        for a in &parts {
            for b in &parts {
                for c in &parts {
                    if a.card() * b.card() * c.card() <= family.max_module {
                        out.push(Module::direct_sum(
                            vec![Arc::clone(a), Arc::clone(b), Arc::clone(c)],
                            caps,
                        )?);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn sample_cases(cases: Vec<CaseData>, mode: SampleMode) -> Vec<CaseData> {
    match mode {
        SampleMode::Exhaustive => cases,
        SampleMode::Sampled { seed, count } => {
            if count >= cases.len() {
                return cases;
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut keep: Vec<usize> = sample(&mut rng, cases.len(), count).into_vec();
            keep.sort_unstable();
            keep.into_iter().map(|i| cases[i].clone()).collect()
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum SubmoduleFilter {
    All,
    MultiplicationOnly,
}

fn submodule_cases(
    family: &InstanceFamily,
    caps: &Caps,
    filter: SubmoduleFilter,
) -> Result<Vec<CaseData>> {
    let mut cases = Vec::new();
    for ring in family_rings(family, caps)? {
        let sets = enumerate_mult_closed(&ring)?;
        for module in family_modules(&ring, family, caps)? {
            if filter == SubmoduleFilter::MultiplicationOnly && !is_multiplication(&module, caps)? {
                continue;
            }
            let expr = module.to_expr()?;
            for p in enumerate_submodules(&module, caps)? {
                for s in &sets {
                    cases.push(CaseData::Submodule {
                        module: expr.clone(),
                        p: p.values(),
                        s: s.values(),
                    });
                }
            }
        }
    }
    Ok(cases)
}

fn two_set_cases(family: &InstanceFamily, caps: &Caps) -> Result<Vec<CaseData>> {
    let mut cases = Vec::new();
    for ring in family_rings(family, caps)? {
        let sets = enumerate_mult_closed(&ring)?;
        for module in family_modules(&ring, family, caps)? {
            let expr = module.to_expr()?;
            for p in enumerate_submodules(&module, caps)? {
                for s1 in &sets {
                    for s2 in &sets {
                        if s1.is_subset_of(s2) {
                            cases.push(CaseData::TwoSets {
                                module: expr.clone(),
                                p: p.values(),
                                s1: s1.values(),
                                s2: s2.values(),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(cases)
}

fn hom_cases(family: &InstanceFamily, caps: &Caps) -> Result<Vec<CaseData>> {
    let mut cases = Vec::new();
    for ring in family_rings(family, caps)? {
        let sets = enumerate_mult_closed(&ring)?;
        let modules = family_modules(&ring, family, caps)?;
        for dom in &modules {
            let dom_expr = dom.to_expr()?;
            let dom_subs = enumerate_submodules(dom, caps)?;
            for cod in &modules {
                let cod_expr = cod.to_expr()?;
                let cod_subs = enumerate_submodules(cod, caps)?;
                for hom in enumerate_homs(dom, cod)? {
                    let images = hom.images();
                    for p in &cod_subs {
                        for s in &sets {
                            cases.push(CaseData::Hom {
                                domain: dom_expr.clone(),
                                codomain: cod_expr.clone(),
                                images: images.clone(),
                                p: p.values(),
                                s: s.values(),
                                preimage: true,
                            });
                        }
                    }
                    for p in &dom_subs {
                        for s in &sets {
                            cases.push(CaseData::Hom {
                                domain: dom_expr.clone(),
                                codomain: cod_expr.clone(),
                                images: images.clone(),
                                p: p.values(),
                                s: s.values(),
                                preimage: false,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(cases)
}

fn with_sub_cases(family: &InstanceFamily, caps: &Caps) -> Result<Vec<CaseData>> {
    let mut cases = Vec::new();
    for ring in family_rings(family, caps)? {
        let sets = enumerate_mult_closed(&ring)?;
        for module in family_modules(&ring, family, caps)? {
            let expr = module.to_expr()?;
            let subs = enumerate_submodules(&module, caps)?;
            for l in &subs {
                for p in &subs {
                    for s in &sets {
                        cases.push(CaseData::WithSub {
                            module: expr.clone(),
                            l: l.values(),
                            p: p.values(),
                            s: s.values(),
                        });
                    }
                }
            }
        }
    }
    Ok(cases)
}

fn no_set_cases(family: &InstanceFamily, caps: &Caps, quasi_local: bool) -> Result<Vec<CaseData>> {
    let mut cases = Vec::new();
    for ring in family_rings(family, caps)? {
        let spectrum = ideal_spectrum(&ring, caps)?;
        if quasi_local && spectrum.maximals.len() != 1 {
            continue;
        }
        for module in family_modules(&ring, family, caps)? {
            let expr = module.to_expr()?;
            let full = Submodule::full(&module);
            for p in enumerate_submodules(&module, caps)? {
                let colon = p.colon_by(&full);
                if !quasi_local && !colon.set().is_subset(spectrum.jacobson.set()) {
                    continue;
                }
                if quasi_local && !p.is_proper() {
                    continue;
                }
                cases.push(CaseData::SubmoduleNoSet { module: expr.clone(), p: p.values() });
            }
        }
    }
    Ok(cases)
}

fn ideal_with_module_cases(family: &InstanceFamily, caps: &Caps) -> Result<Vec<CaseData>> {
    let mut cases = Vec::new();
    for ring in family_rings(family, caps)? {
        let sets = enumerate_mult_closed(&ring)?;
        let ideals = enumerate_ideals(&ring, caps)?;
        for module in family_modules(&ring, family, caps)? {
            if !annihilator(&module).set().eq(crate::ideal::Ideal::zero(&ring).set()) {
                continue;
            }
            if !is_multiplication(&module, caps)? {
                continue;
            }
            let expr = module.to_expr()?;
            for p in &ideals {
                for s in &sets {
                    cases.push(CaseData::IdealWithModule {
                        module: expr.clone(),
                        ideal: p.values(),
                        s: s.values(),
                    });
                }
            }
        }
    }
    Ok(cases)
}

/// Pool of components for product cases: every `(module, P, S)` over every
/// family ring.
fn component_pool(family: &InstanceFamily, caps: &Caps) -> Result<Vec<ProductComponent>> {
    let mut pool = Vec::new();
    for ring in family_rings(family, caps)? {
        let sets = enumerate_mult_closed(&ring)?;
        for module in family_modules(&ring, family, caps)? {
            let expr = module.to_expr()?;
            for p in enumerate_submodules(&module, caps)? {
                for s in &sets {
                    pool.push(ProductComponent {
                        module: expr.clone(),
                        p: p.values(),
                        s: s.values(),
                    });
                }
            }
        }
    }
    Ok(pool)
}

fn product_cases(family: &InstanceFamily, caps: &Caps, arity: usize, regular_only: bool) -> Result<Vec<CaseData>> {
    let shaped = InstanceFamily {
        shapes: if regular_only {
            ModuleShapes { regular: true, cyclic: false, quotients: false, direct_sums: false }
        } else {
            family.shapes
        },
        ..family.clone()
    };
    let pool = component_pool(&shaped, caps)?;
    let mut cases = Vec::new();
    let mut stack = vec![0usize; arity];
    'outer: loop {
        let components: Vec<ProductComponent> = stack.iter().map(|&i| pool[i].clone()).collect();
        cases.push(CaseData::Product { components });
        for k in (0..arity).rev() {
            stack[k] += 1;
            if stack[k] < pool.len() {
                continue 'outer;
            }
            stack[k] = 0;
            if k == 0 {
                break 'outer;
            }
        }
    }
    Ok(cases)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum IdealizationFlavor {
    /// `p` inside `Ann(M)`, no set quantifier.
    PrimaryTransfer,
    /// all `(p, S)` pairs, lifted submodule fixed to `M`.
    SPrimaryTransfer,
    /// all `(p, N)` with `pM` inside `N`, no set quantifier.
    RadicalLaw,
}

fn idealization_cases(
    family: &InstanceFamily,
    caps: &Caps,
    flavor: IdealizationFlavor,
) -> Result<Vec<CaseData>> {
    let mut cases = Vec::new();
    for ring in family_rings(family, caps)? {
        let n = ring.card() as u64;
        let sets = enumerate_mult_closed(&ring)?;
        let ideals = enumerate_ideals(&ring, caps)?;
        for d in 1..=n {
            if !n.is_multiple_of(d) {
                continue;
            }
            let carrier = Module::cyclic_zmod(&ring, d, caps)?;
            let expr = carrier.to_expr()?;
            let ann = annihilator(&carrier);
            for p in &ideals {
                match flavor {
                    IdealizationFlavor::PrimaryTransfer => {
                        if !p.set().is_subset(ann.set()) {
                            continue;
                        }
                        cases.push(CaseData::Idealization {
                            carrier: expr.clone(),
                            ideal: p.values(),
                            sub: Submodule::full(&carrier).values(),
                            s: vec![ring.value(ring.one()).clone()],
                        });
                    }
                    IdealizationFlavor::SPrimaryTransfer => {
                        for s in &sets {
                            cases.push(CaseData::Idealization {
                                carrier: expr.clone(),
                                ideal: p.values(),
                                sub: Submodule::full(&carrier).values(),
                                s: s.values(),
                            });
                        }
                    }
                    IdealizationFlavor::RadicalLaw => {
                        for sub in enumerate_submodules(&carrier, caps)? {
                            let absorbed = p
                                .set()
                                .iter()
                                .all(|a| (0..carrier.card()).all(|m| sub.contains(carrier.act(a, m))));
                            if !absorbed {
                                continue;
                            }
                            cases.push(CaseData::Idealization {
                                carrier: expr.clone(),
                                ideal: p.values(),
                                sub: sub.values(),
                                s: vec![ring.value(ring.one()).clone()],
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(cases)
}

fn module_only_cases(family: &InstanceFamily, caps: &Caps) -> Result<Vec<CaseData>> {
    let mut cases = Vec::new();
    for ring in family_rings(family, caps)? {
        let n = ring.card() as u64;
        let is_prime = (2..n).all(|k| !n.is_multiple_of(k));
        if !is_prime {
            continue;
        }
        for module in family_modules(&ring, family, caps)? {
            if module.card() < 2 {
                continue;
            }
            cases.push(CaseData::ModuleOnly { module: module.to_expr()? });
        }
    }
    Ok(cases)
}

pub fn generate_cases(
    property: &str,
    family: &InstanceFamily,
    caps: &Caps,
) -> Result<Vec<CaseData>> {
    let cases = match property {
        "thm1-equivalences" | "lemma03-primary" | "prop4b-saturation" | "prop4c-localization"
        | "prop8-colon-ideal" | "lemma19-colon-witness" | "prop20-localization-colon"
        | "thm21-colon-primary" | "prop27-torsionfree" | "prop29-quasi-torsionfree" => {
            submodule_cases(family, caps, SubmoduleFilter::All)?
        }
        "cor10-product-form" | "cor11-rad-form" | "prop15-intersection" | "thm14-multiplication" => {
            submodule_cases(family, caps, SubmoduleFilter::MultiplicationOnly)?
        }
        "prop4a-enlarge" => two_set_cases(family, caps)?,
        "prop61-homs" => hom_cases(family, caps)?,
        "cor7-transfer" => with_sub_cases(family, caps)?,
        "thm22-jacobson" => no_set_cases(family, caps, false)?,
        "cor23-quasilocal" => no_set_cases(family, caps, true)?,
        "lemma13-faithful" => ideal_with_module_cases(family, caps)?,
        "lemma16-product-ideals" => product_cases(family, caps, 2, true)?,
        "thm17-product" => product_cases(family, caps, 2, false)?,
        "thm18-product3" => product_cases(family, caps, 3, false)?,
        "prop241-idealization-primary" => {
            idealization_cases(family, caps, IdealizationFlavor::PrimaryTransfer)?
        }
        "thm25-idealization" => {
            idealization_cases(family, caps, IdealizationFlavor::SPrimaryTransfer)?
        }
        "rem24b-radical-law" => idealization_cases(family, caps, IdealizationFlavor::RadicalLaw)?,
        "thm31-domains" => module_only_cases(family, caps)?,
        other => return Err(Error::UnknownProperty(other.into())),
    };
    Ok(sample_cases(cases, family.mode))
}

/// First separating instance search also walks `(M, P, S)` triples in this
/// order.
pub(crate) fn submodule_triples_in_order(
    family: &InstanceFamily,
    caps: &Caps,
) -> Result<Vec<(Arc<Module>, Submodule, MultClosedSet)>> {
    let mut out = Vec::new();
    for ring in family_rings(family, caps)? {
        let sets = enumerate_mult_closed(&ring)?;
        for module in family_modules(&ring, family, caps)? {
            for p in enumerate_submodules(&module, caps)? {
                for s in &sets {
                    out.push((Arc::clone(&module), p.clone(), s.clone()));
                }
            }
        }
    }
    Ok(out)
}

// Re-check the family plumbing itself: the generators must be deterministic.
#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_is_deterministic() {
        let caps = Caps::default();
        let family = InstanceFamily::new("tiny", 4, 4, ModuleShapes::basic());
        let a = generate_cases("thm1-equivalences", &family, &caps).unwrap();
        let b = generate_cases("thm1-equivalences", &family, &caps).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_empty());
    }

    #[test]
    fn sampling_is_reproducible_and_smaller() {
        let caps = Caps::default();
        let mut family = InstanceFamily::new("tiny", 6, 6, ModuleShapes::basic());
        let full = generate_cases("thm1-equivalences", &family, &caps).unwrap();
        family.mode = SampleMode::Sampled { seed: 7, count: 10 };
        let a = generate_cases("thm1-equivalences", &family, &caps).unwrap();
        let b = generate_cases("thm1-equivalences", &family, &caps).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 10);
        assert!(a.iter().all(|c| full.contains(c)));
    }

    #[test]
    fn unknown_property_is_an_error() {
        let caps = Caps::default();
        let family = InstanceFamily::new("tiny", 3, 3, ModuleShapes::basic());
        assert!(matches!(
            generate_cases("no-such-property", &family, &caps),
            Err(Error::UnknownProperty(_))
        ));
    }
}
