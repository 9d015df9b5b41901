use super::category::{FinCategory, Functor, Mor, Obj};
use crate::error::{Error, Result};

/// Which comma category to build.
#[derive(Clone, Copy, Debug)]
pub enum CommaKind<'a> {
    /// `c\C`: objects are morphisms out of `c`.
    Under(Obj),
    /// `C/c`: objects are morphisms into `c`.
    Over(Obj),
    /// `c/f` for a functor `f: D → C`: objects are pairs `(d, c → f(d))`.
    OfFunctor { source: &'a FinCategory, functor: &'a Functor, object: Obj },
}

/// A comma category with its forgetful functor. For [`CommaKind::Under`] and
/// [`CommaKind::Over`] the forgetful functor lands in the base category, for
/// [`CommaKind::OfFunctor`] in the source of the functor.
#[derive(Clone, Debug)]
pub struct Comma {
    pub category: FinCategory,
    pub forget: Functor,
    /// Structure morphism of each object.
    pub structure: Vec<Mor>,
}

pub fn comma(base: &FinCategory, kind: CommaKind<'_>) -> Result<Comma> {
    match kind {
        CommaKind::Under(c) => {
            check_obj(base, c)?;
            let id = Functor::identity(base);
            comma_of_functor(base, base, &id, c)
        }
        CommaKind::Over(c) => {
            check_obj(base, c)?;
            // objects g: x → c, morphisms h: x → y with g' ∘ h = g
            let objs: Vec<Mor> = base.objects().flat_map(|x| base.hom(x, c).to_vec()).collect();
            let names: Vec<String> = objs.iter().map(|g| base.name(*g).to_string()).collect();
            let mut morphisms = Vec::new();
            let mut tags = Vec::new();
            for (i, &g) in objs.iter().enumerate() {
                for (j, &g2) in objs.iter().enumerate() {
                    for &h in base.hom(base.source(g), base.source(g2)) {
                        if base.compose(g2, h)? == g && !(i == j && base.is_identity(h)) {
                            morphisms.push((format!("{}:{}", base.name(h), names[i]), i, j));
                            tags.push((h, i, j));
                        }
                    }
                }
            }
            let composites = comma_composites(base, &tags, &names)?;
            let category = FinCategory::new(names, morphisms, &composites)?;
            let forget_objs: Vec<Obj> = objs.iter().map(|g| base.source(*g)).collect();
            let forget = forgetful(&category, base, forget_objs, &tags)?;
            Ok(Comma { category, forget, structure: objs })
        }
        CommaKind::OfFunctor { source, functor, object } => {
            check_obj(base, object)?;
            functor.validate(source, base)?;
            comma_of_functor(base, source, functor, object)
        }
    }
}

fn check_obj(base: &FinCategory, c: Obj) -> Result<()> {
    if c.0 >= base.object_count() {
        return Err(Error::Lookup(format!("object {} not in category", c.0)));
    }
    Ok(())
}

fn comma_of_functor(base: &FinCategory, source: &FinCategory, f: &Functor, c: Obj) -> Result<Comma> {
    // objects (d, g: c → f(d))
    let mut objs: Vec<(Obj, Mor)> = Vec::new();
    for d in source.objects() {
        for &g in base.hom(c, f.obj(d)) {
            objs.push((d, g));
        }
    }
    let names: Vec<String> = objs
        .iter()
        .map(|(d, g)| {
            if std::ptr::eq(base, source) {
                base.name(*g).to_string()
            } else {
                format!("({},{})", source.object_name(*d), base.name(*g))
            }
        })
        .collect();
    let mut morphisms = Vec::new();
    let mut tags = Vec::new();
    for (i, &(d, g)) in objs.iter().enumerate() {
        for (j, &(d2, g2)) in objs.iter().enumerate() {
            for &h in source.hom(d, d2) {
                if base.compose(f.mor(h), g)? == g2 && !(i == j && source.is_identity(h)) {
                    morphisms.push((format!("{}:{}", source.name(h), names[i]), i, j));
                    tags.push((h, i, j));
                }
            }
        }
    }
    let composites = comma_composites(source, &tags, &names)?;
    let category = FinCategory::new(names, morphisms, &composites)?;
    let forget_objs: Vec<Obj> = objs.iter().map(|(d, _)| *d).collect();
    let forget = forgetful(&category, source, forget_objs, &tags)?;
    Ok(Comma { category, forget, structure: objs.iter().map(|(_, g)| *g).collect() })
}

fn comma_composites(
    under: &FinCategory,
    tags: &[(Mor, usize, usize)],
    names: &[String],
) -> Result<Vec<(String, String, String)>> {
    let name_of = |h: Mor, i: usize, j: usize| {
        if i == j && under.is_identity(h) {
            format!("id_{}", names[i])
        } else {
            format!("{}:{}", under.name(h), names[i])
        }
    };
    let mut composites = Vec::new();
    for &(h1, i, j) in tags {
        for &(h2, k, l) in tags {
            if j == k {
                let h = under.compose(h2, h1)?;
                composites.push((name_of(h2, k, l), name_of(h1, i, j), name_of(h, i, l)));
            }
        }
    }
    Ok(composites)
}

fn forgetful(cat: &FinCategory, target: &FinCategory, objs: Vec<Obj>, tags: &[(Mor, usize, usize)]) -> Result<Functor> {
    let mut mors = Vec::with_capacity(cat.morphism_count());
    for o in cat.objects() {
        debug_assert_eq!(cat.identity(o).0, o.0);
        mors.push(target.identity(objs[o.0]));
    }
    for &(h, _, _) in tags {
        mors.push(h);
    }
    Functor::new(cat, target, objs, mors)
}
