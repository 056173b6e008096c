//! Human-readable summaries. JSON is the stable format; these are for people.

use std::fmt::Write;

use acta_core::classify::{HierarchyReport, MonoidReport, OmegaReport, Section, StarCover};
use acta_core::flatness::Tossing;
use acta_core::FiniteMonoid;

use crate::commands::{CongruenceEntry, Point};

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// The serialized name of a unit enum variant.
fn tag<T: serde::Serialize>(x: &T) -> String {
    match serde_json::to_value(x) {
        Ok(serde_json::Value::String(s)) => s,
        _ => "?".into(),
    }
}

fn set(m: &FiniteMonoid, xs: &[usize]) -> String {
    let items: Vec<String> = xs.iter().map(|&x| m.label(x)).collect();
    format!("{{{}}}", items.join(", "))
}

pub fn report(m: &FiniteMonoid, r: &MonoidReport) -> String {
    let mut s = String::new();
    let p = &r.predicates;
    let _ = writeln!(
        s,
        "monoid of order {} (identity {})",
        r.order,
        m.label(r.identity)
    );
    for (name, flag) in [
        ("group", &p.is_group),
        ("commutative", &p.is_commutative),
        ("regular", &p.is_regular),
        ("inverse", &p.is_inverse),
        ("group-bound", &p.is_group_bound),
        ("local", &p.is_local),
        ("left cancellative", &p.is_left_cancellative),
        ("right cancellative", &p.is_right_cancellative),
    ] {
        let _ = writeln!(s, "  {name:<19} {}", yes(flag.holds));
    }
    let _ = writeln!(
        s,
        "green: {} R-classes, {} L-classes, {} H-classes, {} D-classes",
        r.green.r.class_count(),
        r.green.l.class_count(),
        r.green.h.class_count(),
        r.green.d.class_count()
    );
    let cfrs: Vec<String> = r
        .cfrs
        .iter()
        .enumerate()
        .map(|(x, n)| format!("{}:{n}", m.label(x)))
        .collect();
    let _ = writeln!(s, "cfrs bounds: {}", cfrs.join(" "));
    let _ = writeln!(
        s,
        "left perfect: {} (condition (A) window {} clean: {})",
        yes(r.perfect.left_perfect),
        r.perfect.condition_a.window.seq_len,
        yes(r.perfect.condition_a.window.clean)
    );
    let a = &r.axiomatisable;
    let _ = writeln!(
        s,
        "axiomatisable: SF {}, P {}, Fr {}",
        yes(a.sf.holds),
        yes(a.p.holds),
        yes(a.fr.holds)
    );
    for cover in &a.fr.covers {
        let _ = writeln!(
            s,
            "  f for {}: {}",
            m.label(cover.idempotent),
            set(m, &cover.cover)
        );
    }
    match &a.wf_f {
        Section::Done(x) => {
            let _ = writeln!(
                s,
                "WF/F: {} (m_max {}, {} realised triples, longest replacement {})",
                x.status, x.m_max, x.realised, x.max_replacement_length
            );
        }
        Section::Skipped { skipped } => {
            let _ = writeln!(s, "WF/F: skipped ({skipped})");
        }
    }
    let c = &r.complete;
    let _ = writeln!(
        s,
        "complete: SF {}, P {}, Fr {}",
        tag(&c.sf.status),
        tag(&c.p.status),
        tag(&c.fr.status)
    );
    match &r.cu {
        Section::Done(o) => s.push_str(&cu(m, o)),
        Section::Skipped { skipped } => {
            let _ = writeln!(s, "CU: skipped ({skipped})");
        }
    }
    match &r.flatness_samples {
        Section::Done(samples) => {
            for sample in samples {
                let _ = write!(s, "act {}: ", sample.act);
                s.push_str(&hierarchy(&sample.hierarchy));
            }
        }
        Section::Skipped { skipped } => {
            let _ = writeln!(s, "flatness samples: skipped ({skipped})");
        }
    }
    s
}

pub fn hierarchy(h: &HierarchyReport) -> String {
    format!(
        "free {}, projective {}, strongly flat {}, flat {} (bound {}), weakly flat {}\n",
        yes(h.free),
        yes(h.projective),
        yes(h.strongly_flat.holds),
        tag(&h.flat.status),
        h.flat.bound,
        yes(h.weakly_flat.holds)
    )
}

pub fn cu(m: &FiniteMonoid, o: &OmegaReport) -> String {
    let mut s = format!(
        "CU: {} submonoids, {} idempotents, injective {}\n",
        o.cu_size,
        o.idempotent_count,
        yes(o.injective)
    );
    for e in &o.cu {
        let _ = writeln!(
            s,
            "  {} -> {}",
            set(m, e.submonoid.members()),
            m.label(e.idempotent)
        );
    }
    s
}

pub fn witness(m: &FiniteMonoid, covers: &[StarCover]) -> String {
    if covers.is_empty() {
        return "no idempotents other than the identity\n".into();
    }
    let mut s = String::new();
    for c in covers {
        let _ = writeln!(
            s,
            "idempotent {}: f = {}",
            m.label(c.idempotent),
            set(m, &c.cover)
        );
        for f in &c.factorisations {
            let _ = writeln!(s, "  {} = {}*{}", m.label(f.a), m.label(f.x), m.label(f.y));
        }
    }
    s
}

pub fn tensor(
    classes: &[Vec<(usize, usize)>],
    query: Option<(Point, Point, Option<&Tossing>)>,
) -> String {
    let mut s = format!("{} classes\n", classes.len());
    for class in classes {
        let members: Vec<String> = class.iter().map(|(a, b)| format!("{a}⊗{b}")).collect();
        let _ = writeln!(s, "  {}", members.join(" "));
    }
    if let Some((from, to, tossing)) = query {
        match tossing {
            Some(t) => {
                let _ = writeln!(
                    s,
                    "{}⊗{} = {}⊗{} by a tossing of length {}: skeleton {:?}, left {:?}, right {:?}",
                    from.0,
                    from.1,
                    to.0,
                    to.1,
                    t.skeleton.len(),
                    t.skeleton.entries(),
                    t.left_chain,
                    t.right_chain
                );
            }
            None => {
                let _ = writeln!(s, "{}⊗{} and {}⊗{}: not equal", from.0, from.1, to.0, to.1);
            }
        }
    }
    s
}

pub fn from_dfa(m: &FiniteMonoid, words: &[String]) -> String {
    let mut s = format!("monoid of order {}\n", m.order());
    for (x, w) in words.iter().enumerate() {
        let w = if w.is_empty() { "(empty word)" } else { w };
        let row: Vec<String> = m.elements().map(|y| m.mul(x, y).to_string()).collect();
        let _ = writeln!(s, "  {x}: {w:<12} {}", row.join(" "));
    }
    s
}

pub fn congruences(list: &[CongruenceEntry]) -> String {
    let mut s = format!("{} left congruences\n", list.len());
    for c in list {
        let classes: Vec<String> = c
            .classes
            .classes()
            .iter()
            .map(|cl| {
                let items: Vec<String> = cl.iter().map(usize::to_string).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        let _ = writeln!(
            s,
            "  {}  strongly flat {}",
            classes.join(" "),
            yes(c.strongly_flat)
        );
    }
    s
}
