//! Constructions behind the bundled catalogs.
//!
//! Every group is built from generators (matrices over small fields, known
//! Mathieu generators, coset actions found by subgroup search) and its flags
//! are computed, never copied. The bundled `.cat` files are the output of
//! [`primitive_catalog`], [`quasiprimitive_catalog`] and [`spot_catalog`].

pub mod classical;
pub mod field;
pub mod projective;
pub mod subgroups;

use std::collections::BTreeSet;

use crate::catalog::{CatalogRecord, Flags};
use crate::error::Result;
use crate::perm::Permutation;
use crate::permgrp::PermGroup;

use classical::{on_sets, restrict, Orthogonal53};
use projective::{linear_group, Linear, ProjectiveSpace};
use subgroups::{find_subgroup, normalizer, subgroups_of_orders};

/// Bundled primitive catalog text.
pub const PRIMITIVE: &str = include_str!("../../catalogs/primitive.cat");
/// Bundled quasi-imprimitive catalog text.
pub const QUASIPRIMITIVE: &str = include_str!("../../catalogs/quasiprimitive.cat");
/// Bundled spot-check catalog text.
pub const SPOT: &str = include_str!("../../catalogs/spot.cat");

/// Resolves `@primitive`, `@quasiprimitive` and `@spot`.
pub fn bundled(name: &str) -> Option<&'static str> {
    match name {
        "@primitive" => Some(PRIMITIVE),
        "@quasiprimitive" => Some(QUASIPRIMITIVE),
        "@spot" => Some(SPOT),
        _ => None,
    }
}

/// Degrees covered by the primitive catalog.
pub const PRIMITIVE_DEGREES: [usize; 12] = [4, 10, 12, 15, 20, 21, 24, 28, 30, 36, 40, 45];
/// Degrees covered by the quasi-imprimitive catalog.
pub const QUASI_DEGREES: [usize; 7] = [12, 15, 20, 21, 24, 28, 30];

fn record(label: &str, gens: Vec<Permutation>, provenance: &str) -> Result<CatalogRecord> {
    let gens = PermGroup::new(gens)?.reduced_generators();
    let group = PermGroup::new(gens.clone())?;
    let flags = Flags {
        transitive: group.is_transitive(),
        primitive: group.is_primitive(),
        quasiprimitive: group.is_quasiprimitive()?,
    };
    Ok(CatalogRecord {
        label: label.to_string(),
        degree: group.degree(),
        generators: gens,
        flags,
        provenance: provenance.to_string(),
    })
}

fn parse_all(cycles: &[&str], degree: usize) -> Vec<Permutation> {
    cycles
        .iter()
        .map(|c| Permutation::parse(c, degree).expect("valid built-in generator"))
        .collect()
}

fn natural_symmetric(n: usize) -> Vec<Permutation> {
    PermGroup::symmetric(n).generators().to_vec()
}

/// `A_n = <(1,2,3), (1,..,n)>` for odd `n`, `<(1,2,3), (2,..,n)>` for even `n`.
fn natural_alternating(n: usize) -> Vec<Permutation> {
    let long: Vec<usize> = if n % 2 == 1 {
        (0..n).collect()
    } else {
        (1..n).collect()
    };
    vec![
        Permutation::from_cycles(n, &[&[0, 1, 2]]).unwrap(),
        Permutation::from_cycles(n, &[&long]).unwrap(),
    ]
}

/// Action on unordered pairs, listed lexicographically.
pub fn on_pairs(gens: &[Permutation]) -> Vec<Permutation> {
    let n = gens[0].degree();
    let pairs: Vec<Vec<usize>> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| vec![a, b]))
        .collect();
    gens.iter().map(|g| on_sets(g, &pairs)).collect()
}

/// Product action of `T wr 2`-type groups on `6 x 6` points, `(x, y) ↦ 6x + y`.
/// `top` selects the extension above `T x T` (see [`ProductTop`]).
fn product_action(t: &[Permutation], outer: &Permutation, top: ProductTop) -> Vec<Permutation> {
    let m = t[0].degree();
    let pair = |f: &dyn Fn(usize, usize) -> (usize, usize)| -> Permutation {
        let images = (0..m * m)
            .map(|p| {
                let (x, y) = f(p / m, p % m);
                (x * m + y) as u32
            })
            .collect();
        Permutation::from_images(images).unwrap()
    };
    let left = |g: &Permutation| pair(&|x, y| (g.image(x), y));
    let swap = pair(&|x, y| (y, x));
    let mut gens: Vec<Permutation> = t.iter().map(left).collect();
    gens.extend(t.iter().map(|g| pair(&|x, y| (x, g.image(y)))));
    let o1 = left(outer);
    match top {
        ProductTop::Wreath => gens.push(swap),
        ProductTop::Cyclic4 => gens.push(o1.then(&swap)),
        ProductTop::Klein => {
            gens.push(pair(&|x, y| (outer.image(x), outer.image(y))));
            gens.push(swap);
        }
        ProductTop::FullWreath => {
            gens.push(o1);
            gens.push(swap);
        }
    }
    gens
}

#[derive(Clone, Copy, Debug)]
enum ProductTop {
    /// `<T^2, σ>`
    Wreath,
    /// `<T^2, (o,1)σ>`
    Cyclic4,
    /// `<T^2, (o,o), σ>`
    Klein,
    /// `<T^2, (o,1), σ>`
    FullWreath,
}

/// A cyclic subgroup generated by the first class representative of order `m`.
fn cyclic_of_order(g: &PermGroup, m: u64) -> Result<PermGroup> {
    let x = g
        .class_representatives()?
        .into_iter()
        .find(|x| x.order() == m)
        .expect("an element of the requested order");
    g.subgroup(vec![x])
}

fn coset_image(g: &PermGroup, h: &PermGroup) -> Result<Vec<Permutation>> {
    let action = g.coset_action(h)?;
    assert!(action.faithful, "coset action is faithful");
    Ok(action.group.generators().to_vec())
}

/// Generators of the projective line groups over `GF(q)`.
fn line(q: usize, kind: Linear) -> Vec<Permutation> {
    linear_group(&ProjectiveSpace::new(q, 2), kind)
}

fn group(gens: Vec<Permutation>) -> PermGroup {
    PermGroup::new(gens).expect("generators share a degree")
}

/// `M10 = <PSL(2,9), diag(ω,1)·Frobenius>` on the projective line.
fn m10_gens() -> Vec<Permutation> {
    let space = ProjectiveSpace::new(9, 2);
    let mut gens = linear_group(&space, Linear::Psl);
    let d = space.matrix_perm(&space.diagonal_generator());
    gens.push(d.then(&space.frobenius_perm()));
    gens
}

fn m11_gens() -> Vec<Permutation> {
    parse_all(&["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"], 11)
}

fn m12_gens() -> Vec<Permutation> {
    parse_all(
        &[
            "(1,2,3,4,5,6,7,8,9,10,11)",
            "(3,7,11,8)(4,10,5,6)",
            "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)",
        ],
        12,
    )
}

fn m24_gens() -> Vec<Permutation> {
    parse_all(
        &[
            "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
            "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)",
            "(1,24)(2,23)(3,12)(4,16)(5,18)(6,10)(7,20)(8,14)(9,21)(11,17)(13,22)(15,19)",
        ],
        24,
    )
}

/// `PSU(3,3)` and `PΓU(3,3)` generators on the 63 points of `PG(2,9)`
/// together with the isotropic and non-isotropic point lists.
fn unitary() -> (Vec<Permutation>, Permutation, Vec<usize>, Vec<usize>) {
    let (space, gens, frob) = classical::unitary33();
    let (iso, non) = classical::unitary_point_split(&space);
    (gens, frob, iso, non)
}

fn restrict_all(gens: &[Permutation], points: &[usize]) -> Vec<Permutation> {
    gens.iter().map(|g| restrict(g, points)).collect()
}

/// The primitive groups of the degrees in [`PRIMITIVE_DEGREES`], one record per
/// conjugacy class in the symmetric group.
pub fn primitive_catalog() -> Result<Vec<CatalogRecord>> {
    let mut out = Vec::new();
    let mut push = |label: &str, gens: Vec<Permutation>, prov: &str| -> Result<()> {
        out.push(record(label, gens, prov)?);
        Ok(())
    };

    for n in PRIMITIVE_DEGREES {
        push(
            &format!("A{n}"),
            natural_alternating(n),
            "natural action of the alternating group",
        )?;
        push(
            &format!("S{n}"),
            natural_symmetric(n),
            "natural action of the symmetric group",
        )?;
    }

    for (n, d) in [(5, 10), (6, 15), (7, 21), (8, 28), (9, 36), (10, 45)] {
        let prov = format!("action on the {d} unordered pairs of {n} points");
        push(
            &format!("A{n}-on-{d}"),
            on_pairs(&natural_alternating(n)),
            &prov,
        )?;
        push(
            &format!("S{n}-on-{d}"),
            on_pairs(&natural_symmetric(n)),
            &prov,
        )?;
    }

    // projective lines
    for (q, kinds) in [
        (
            9,
            &[Linear::Psl, Linear::Pgl, Linear::Psigmal, Linear::Pgammal][..],
        ),
        (11, &[Linear::Psl, Linear::Pgl][..]),
        (19, &[Linear::Psl, Linear::Pgl][..]),
        (23, &[Linear::Psl, Linear::Pgl][..]),
        (
            27,
            &[Linear::Psl, Linear::Pgl, Linear::Psigmal, Linear::Pgammal][..],
        ),
        (29, &[Linear::Psl, Linear::Pgl][..]),
    ] {
        for &kind in kinds {
            let name = linear_name(kind, 2, q);
            push(
                &format!("{name}-on-{}", q + 1),
                line(q, kind),
                &format!("{name} on the points of the projective line over GF({q})"),
            )?;
        }
    }
    push("M10-on-10", m10_gens(), "PSL(2,9) extended by diag(w,1) composed with the Frobenius map, on the projective line over GF(9)")?;

    // pairs of points of PG(1,9)
    let pairs_prov = "action on the 45 unordered pairs of points of the projective line over GF(9)";
    push(
        "PGL(2,9)-on-45",
        on_pairs(&line(9, Linear::Pgl)),
        pairs_prov,
    )?;
    push("M10-on-45", on_pairs(&m10_gens()), pairs_prov)?;
    push(
        "PGammaL(2,9)-on-45",
        on_pairs(&line(9, Linear::Pgammal)),
        pairs_prov,
    )?;

    // Mathieu groups
    let m12 = m12_gens();
    let m11 = group(m11_gens());
    let l211 = find_subgroup(&m11, 660, |_| true)?.expect("M11 contains PSL(2,11)");
    push(
        "M11-on-12",
        coset_image(&m11, &l211)?,
        "M11 on the cosets of a subgroup of order 660",
    )?;
    push("M12", m12, "M12 from three permutation generators")?;
    push("M24", m24_gens(), "M24 from three permutation generators")?;

    // PSL(3,4) family on the 21 points of PG(2,4)
    let plane4 = ProjectiveSpace::new(4, 3);
    for kind in [Linear::Psl, Linear::Pgl, Linear::Psigmal, Linear::Pgammal] {
        let name = linear_name(kind, 3, 4);
        push(
            &format!("{name}-on-21"),
            linear_group(&plane4, kind),
            &format!("{name} on the points of PG(2,4)"),
        )?;
    }

    // PSL(4,2) and the A7 inside it on 15 points
    let pg32 = ProjectiveSpace::new(2, 4);
    let l42 = linear_group(&pg32, Linear::Psl);
    push(
        "PSL(4,2)-on-15",
        l42.clone(),
        "PSL(4,2) on the points of PG(3,2)",
    )?;
    let l42g = group(l42);
    let a7 = find_subgroup(&l42g, 2520, |_| true)?.expect("PSL(4,2) contains A7");
    push(
        "A7-on-15",
        a7.generators().to_vec(),
        "a subgroup of order 2520 of PSL(4,2) on the points of PG(3,2)",
    )?;

    // PSL(4,3) on PG(3,3)
    let pg33 = ProjectiveSpace::new(3, 4);
    for kind in [Linear::Psl, Linear::Pgl] {
        let name = linear_name(kind, 4, 3);
        push(
            &format!("{name}-on-40"),
            linear_group(&pg33, kind),
            &format!("{name} on the points of PG(3,3)"),
        )?;
    }

    // normalizers of cyclic subgroups in small projective line groups
    let pgl27 = group(line(7, Linear::Pgl));
    for (m, d) in [(8, 21), (6, 28)] {
        let h = normalizer(&pgl27, &cyclic_of_order(&pgl27, m)?)?;
        push(
            &format!("PGL(2,7)-on-{d}"),
            coset_image(&pgl27, &h)?,
            &format!("PGL(2,7) on the cosets of the normalizer of a cyclic subgroup of order {m}"),
        )?;
    }
    for kind in [Linear::Psl, Linear::Pgammal] {
        let name = linear_name(kind, 2, 8);
        let g = group(line(8, kind));
        for (m, d) in [(9, 28), (7, 36)] {
            let h = normalizer(&g, &cyclic_of_order(&g, m)?)?;
            push(
                &format!("{name}-on-{d}"),
                coset_image(&g, &h)?,
                &format!(
                    "{name} on the cosets of the normalizer of a cyclic subgroup of order {m}"
                ),
            )?;
        }
    }
    for (label, gens, m) in [
        ("PGL(2,9)", line(9, Linear::Pgl), 10),
        ("M10", m10_gens(), 5),
        ("PGammaL(2,9)", line(9, Linear::Pgammal), 5),
    ] {
        let g = group(gens);
        let h = normalizer(&g, &cyclic_of_order(&g, m)?)?;
        push(
            &format!("{label}-on-36"),
            coset_image(&g, &h)?,
            &format!("{label} on the cosets of the normalizer of a cyclic subgroup of order {m}"),
        )?;
    }

    // unitary groups
    let (su, frob, iso, _) = unitary();
    let psu28 = restrict_all(&su, &iso);
    let mut pgu28 = psu28.clone();
    pgu28.push(restrict(&frob, &iso));
    push(
        "PSU(3,3)-on-28",
        psu28.clone(),
        "PSU(3,3) on the 28 isotropic points of the hermitian form on PG(2,9)",
    )?;
    push(
        "PGammaU(3,3)-on-28",
        pgu28.clone(),
        "PSU(3,3) and the Frobenius map on the 28 isotropic points",
    )?;
    let psu = group(psu28);
    let pgu = group(pgu28);
    let l27 = find_subgroup(&psu, 168, |_| true)?.expect("PSU(3,3) contains PSL(2,7)");
    push(
        "PSU(3,3)-on-36",
        coset_image(&psu, &l27)?,
        "PSU(3,3) on the cosets of a subgroup of order 168",
    )?;
    let nl27 = normalizer(&pgu, &l27)?;
    push(
        "PGammaU(3,3)-on-36",
        coset_image(&pgu, &nl27)?,
        "PGammaU(3,3) on the cosets of the normalizer of a subgroup of order 168 of PSU(3,3)",
    )?;

    // Sp(6,2) on quadratic forms
    let (minus, plus) = classical::sp62_on_forms();
    push(
        "Sp(6,2)-on-28",
        minus,
        "Sp(6,2) on the 28 quadratic forms of minus type polarizing to the symplectic form",
    )?;
    push(
        "Sp(6,2)-on-36",
        plus,
        "Sp(6,2) on the 36 quadratic forms of plus type polarizing to the symplectic form",
    )?;

    // orthogonal groups in dimension 5 over GF(3)
    let o5 = Orthogonal53::new();
    let po = group(o5.reflections.clone());
    let omega = po.derived_subgroup();
    let lines = o5.singular_lines();
    for (label, g) in [("PO(5,3)", &po), ("Omega(5,3)", &omega)] {
        let gens = g.generators();
        for (value, what) in [(0, "isotropic"), (1, "non-isotropic"), (2, "non-isotropic")] {
            let points = o5.points_with_form(value);
            push(
                &format!("{label}-on-{}", points.len()),
                restrict_all(gens, &points),
                &format!(
                    "{label} on the {} {what} points of PG(4,3) with form value {value}",
                    points.len()
                ),
            )?;
        }
        push(
            &format!("{label}-on-40-lines"),
            gens.iter().map(|s| on_sets(s, &lines)).collect(),
            &format!("{label} on the 40 totally singular lines of PG(4,3)"),
        )?;
    }

    // product actions with socle T^2 for T = PSL(2,5) on 6 points and A6
    let l25 = line(5, Linear::Psl);
    let pgl25 = line(5, Linear::Pgl);
    let outer5 = pgl25.last().expect("a diagonal generator").clone();
    let a6 = natural_alternating(6);
    let outer6 = Permutation::from_cycles(6, &[&[0, 1]])?;
    for (socle, t, o) in [("PSL(2,5)^2", &l25, &outer5), ("A6^2", &a6, &outer6)] {
        for (top, name) in [
            (ProductTop::Wreath, "wr2"),
            (ProductTop::Cyclic4, "4"),
            (ProductTop::Klein, "2^2"),
            (ProductTop::FullWreath, "full-wr2"),
        ] {
            push(
                &format!("{socle}.{name}-on-36"),
                product_action(t, o, top),
                &format!("product action on 6x6 points with socle {socle} and top {top:?}"),
            )?;
        }
    }

    // affine groups of degree 4 are A4 and S4, covered by the naturals
    out.sort_by(|a, b| (a.degree, &a.label).cmp(&(b.degree, &b.label)));
    Ok(out)
}

fn linear_name(kind: Linear, n: usize, q: usize) -> String {
    let stem = match kind {
        Linear::Psl => "PSL",
        Linear::Pgl => "PGL",
        Linear::Psigmal => "PSigmaL",
        Linear::Pgammal => "PGammaL",
    };
    format!("{stem}({n},{q})")
}

/// Almost simple groups searched for quasi-imprimitive actions, each with a
/// group containing it whose conjugation induces the automorphisms of the
/// socle.
fn quasi_sources() -> Vec<(&'static str, Vec<Permutation>, Vec<Permutation>)> {
    let s5 = natural_symmetric(5);
    let pgl27 = line(7, Linear::Pgl);
    let pgaml29 = line(9, Linear::Pgammal);
    let pgl213 = line(13, Linear::Pgl);
    let pgaml28 = line(8, Linear::Pgammal);
    let pgl211 = line(11, Linear::Pgl);
    let s7 = natural_symmetric(7);
    vec![
        ("A5", natural_alternating(5), s5.clone()),
        ("S5", s5.clone(), s5),
        ("PSL(2,7)", line(7, Linear::Psl), pgl27.clone()),
        ("PGL(2,7)", pgl27.clone(), pgl27),
        ("A6", line(9, Linear::Psl), pgaml29.clone()),
        ("S6", line(9, Linear::Psigmal), pgaml29.clone()),
        ("PGL(2,9)", line(9, Linear::Pgl), pgaml29.clone()),
        ("M10", m10_gens(), pgaml29.clone()),
        ("PGammaL(2,9)", pgaml29.clone(), pgaml29),
        ("PSL(2,8)", line(8, Linear::Psl), pgaml28.clone()),
        ("PGammaL(2,8)", pgaml28.clone(), pgaml28),
        ("PSL(2,11)", line(11, Linear::Psl), pgl211.clone()),
        ("PGL(2,11)", pgl211.clone(), pgl211),
        ("PSL(2,13)", line(13, Linear::Psl), pgl213.clone()),
        ("PGL(2,13)", pgl213.clone(), pgl213),
        ("A7", natural_alternating(7), s7.clone()),
        ("S7", s7.clone(), s7),
        ("M11", m11_gens(), m11_gens()),
    ]
}

/// Quasiprimitive but imprimitive actions of degree in [`QUASI_DEGREES`] of
/// the almost simple groups with socle of order at most 7920 that have such
/// actions in this range.
pub fn quasiprimitive_catalog() -> Result<Vec<CatalogRecord>> {
    let degrees: BTreeSet<u64> = QUASI_DEGREES.iter().map(|&d| d as u64).collect();
    let mut out = Vec::new();
    for (name, gens, ambient_gens) in quasi_sources() {
        let g = group(gens);
        let ambient = group(ambient_gens);
        let n = g.order_u64().expect("small group");
        let orders: BTreeSet<u64> = degrees
            .iter()
            .filter(|&&d| n.is_multiple_of(d) && d < n)
            .map(|d| n / d)
            .collect();
        let mut found: Vec<(usize, CatalogRecord)> = Vec::new();
        for h in subgroups_of_orders(&g, &ambient, &orders)? {
            let action = g.coset_action(&h)?;
            let image = &action.group;
            if !action.faithful || image.is_primitive() || !image.is_quasiprimitive()? {
                continue;
            }
            let d = image.degree();
            let order = h.order_u64().unwrap();
            let prov = format!(
                "{name} on the cosets of a subgroup of order {order}, found by subgroup search up to conjugacy under Aut of the socle"
            );
            found.push((
                d,
                record(
                    &format!("{name}-on-{d}"),
                    image.generators().to_vec(),
                    &prov,
                )?,
            ));
        }
        // distinguish several actions of one group on the same degree
        for (d, mut rec) in found.clone() {
            let same: Vec<usize> = found
                .iter()
                .enumerate()
                .filter(|(_, (e, _))| *e == d)
                .map(|(i, _)| i)
                .collect();
            if same.len() > 1 {
                let pos = found
                    .iter()
                    .position(|(_, r)| r.generators == rec.generators)
                    .unwrap();
                let idx = same.iter().position(|&i| i == pos).unwrap();
                rec.label.push((b'a' + idx as u8) as char);
            }
            out.push(rec);
        }
    }
    out.sort_by(|a, b| (a.degree, &a.label).cmp(&(b.degree, &b.label)));
    Ok(out)
}

/// `PSU(3,3)` on the 63 non-isotropic points of `PG(2,9)`.
pub fn spot_catalog() -> Result<Vec<CatalogRecord>> {
    let (su, _, _, non) = unitary();
    Ok(vec![record(
        "PSU(3,3)-on-63",
        restrict_all(&su, &non),
        "PSU(3,3) on the 63 non-isotropic points of the hermitian form on PG(2,9)",
    )?])
}
