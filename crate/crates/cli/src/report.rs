//! JSON views of library results, with elements written by label.

use cranklab::chains::ChainPartition;
use cranklab::completion::SetFamilyLattice;
use cranklab::hereditary::{HeredCollection, Representability};
use cranklab::lattice::{ChainCertificate, IrreducibleReport, RankCertificate, SpecMorphism};
use cranklab::{bits, Lattice, SbMatrix, Witness};
use serde_json::{json, Value};

pub fn names(labels: &[String], xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| labels[x].clone()).collect()
}

pub fn name_sets(labels: &[String], sets: &[Vec<usize>]) -> Vec<Vec<String>> {
    sets.iter().map(|s| names(labels, s)).collect()
}

pub fn mask_names(labels: &[String], m: bits::Mask) -> Vec<String> {
    bits::iter(m).map(|x| labels[x].clone()).collect()
}

pub fn matrix_rows(m: &SbMatrix) -> Vec<String> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.symbol()).collect())
        .collect()
}

/// `rows` and `cols` name the matrix rows and columns.
pub fn witness(row_labels: &[String], col_labels: &[String], w: &Witness) -> Value {
    json!({
        "rows": names(row_labels, &w.rows),
        "cols": names(col_labels, &w.cols),
        "diagonal": w.pairs().map(|(r, c)| [row_labels[r].clone(), col_labels[c].clone()]).collect::<Vec<_>>(),
    })
}

pub fn chain_certificate(labels: &[String], c: &ChainCertificate) -> Value {
    json!({
        "chain": names(labels, &c.chain),
        "steps": c.steps.iter().map(|s| json!({
            "element": labels[s.element],
            "below": labels[s.below],
            "not_below": labels[s.not_below],
        })).collect::<Vec<_>>(),
    })
}

pub fn rank_certificate(l: &Lattice, c: &RankCertificate) -> Value {
    let labels = l.labels();
    json!({
        "c_rank": c.c_rank,
        "height": c.height,
        "equal": c.equal(),
        "independent": names(labels, &c.independent),
        "witness": witness(labels, labels, &c.witness),
        "chain_from_witness": chain_certificate(labels, &c.chain_from_witness),
        "longest_chain": names(labels, &c.longest_chain),
        "independent_from_chain": names(labels, &c.independent_from_chain),
        "witness_from_chain": witness(labels, labels, &c.witness_from_chain),
    })
}

pub fn irreducibles(l: &Lattice, r: &IrreducibleReport) -> Value {
    let labels = l.labels();
    json!({
        "sji": names(labels, &r.sji()),
        "ji": names(labels, &r.ji()),
        "smi": names(labels, &r.smi()),
        "mi": names(labels, &r.mi()),
        "sji_no": r.sji_no,
        "sji_no_b": r.sji_no_b,
        "smi_no": r.smi_no,
        "smi_no_t": r.smi_no_t,
        "ji_no": r.ji_no,
        "ji_no_b": r.ji_no_b,
        "mi_no": r.mi_no,
        "mi_no_t": r.mi_no_t,
        "ss": r.ss,
        "ss_convention": r.convention,
    })
}

pub fn spec(l: &Lattice, s: &SpecMorphism) -> Value {
    let labels = l.labels();
    json!({
        "coordinates": names(labels, &s.coordinates),
        "vectors": (0..l.len()).map(|x| json!({
            "element": labels[x],
            "vector": s.vector_string(s.vectors[x]),
        })).collect::<Vec<_>>(),
        "fibers": name_sets(labels, &s.fibers),
        "image": s.image.labels(),
        "image_covers": s.image.poset().covering_relation().iter()
            .map(|&(a, b)| [s.image.label(a).to_string(), s.image.label(b).to_string()])
            .collect::<Vec<_>>(),
        "injective": s.is_injective(),
        "image_is_set_lattice": s.image_is_set_lattice(),
    })
}

pub fn family(f: &SetFamilyLattice) -> Value {
    let l = f.lattice();
    json!({
        "kind": f.kind,
        "size": f.len(),
        "members": (0..f.len()).map(|i| f.member_labels(i)).collect::<Vec<_>>(),
        "embedding": f.origin.iter().enumerate().map(|(x, &i)| json!({
            "element": f.ground[x],
            "member": f.member_labels(i),
        })).collect::<Vec<_>>(),
        "height": l.height().0,
        "covers": l.poset().covering_relation().iter()
            .map(|&(a, b)| [f.member_labels(a), f.member_labels(b)])
            .collect::<Vec<_>>(),
    })
}

pub fn partition(l: &Lattice, index: usize, q: &ChainPartition, bases: &[Vec<usize>]) -> Value {
    let labels = l.labels();
    json!({
        "index": index,
        "chain": names(labels, &q.chain),
        "blocks": name_sets(labels, &q.blocks),
        "bases": name_sets(labels, bases),
    })
}

pub fn hered_summary(h: &HeredCollection) -> Value {
    let g = h.ground();
    json!({
        "ground": g,
        "members": h.members().len(),
        "bases": h.bases().iter().map(|&b| mask_names(g, b)).collect::<Vec<_>>(),
        "circuits": h.circuits().iter().map(|&c| mask_names(g, c)).collect::<Vec<_>>(),
        "loops": names(g, &h.loops()),
        "parallel": h.parallel_pairs().iter().map(|&(a, b)| [g[a].clone(), g[b].clone()]).collect::<Vec<_>>(),
        "simple": h.is_simple(),
    })
}

pub fn representability(h: &HeredCollection, r: &Representability) -> Value {
    let g = h.ground();
    let obstruction = r.obstruction.as_ref().map(|o| {
        json!({
            "basis": names(g, &o.basis),
            "partitions": o.partitions.iter().map(|p| json!({
                "blocks": name_sets(g, &p.blocks),
                "offending": names(g, &p.offending),
            })).collect::<Vec<_>>(),
        })
    });
    json!({
        "verdict": r.verdict,
        "partitions": r.partitions.iter().map(|p| name_sets(g, p)).collect::<Vec<_>>(),
        "matrix": r.matrix.as_ref().map(matrix_rows),
        "obstruction": obstruction,
    })
}
