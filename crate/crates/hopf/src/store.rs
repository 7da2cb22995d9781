//! The `.hstore` artifact format.
//!
//! A text file with a fixed header line, a SHA-256 digest line and a body.
//! The body holds the dimension, conductor, provenance and the sorted
//! sparse entries of every structure tensor, one `indices -> literal` line
//! per nonzero entry. The digest covers the body bytes exactly, so a load
//! that does not reproduce the digest is rejected as corrupt.

use std::fmt::Write as _;
use std::path::Path;

use hopf_core::hopf::{FinHopf, GroupSpec, HopfParts, Provenance, Structure, Subobject};
use hopf_core::{Conductor, CycNumber, SparseVec};
use sha2::{Digest, Sha256};

use crate::CliError;

const MAGIC: &str = "hstore v1";

fn quoted(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn unquote(s: &str, line: usize) -> Result<String, CliError> {
    serde_json::from_str(s.trim()).map_err(|e| CliError::corrupt(line, &format!("bad string {s}: {e}")))
}

fn digest_hex(body: &str) -> String {
    let digest = Sha256::digest(body.as_bytes());
    digest.iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

fn write_vec(out: &mut String, v: &SparseVec) {
    for (i, c) in v.iter() {
        let _ = writeln!(out, "  {i} -> {}", c.to_literal());
    }
}

fn group_spec_line(g: &GroupSpec) -> String {
    let gens: Vec<String> = g.generators.iter().map(|s| quoted(s)).collect();
    format!("{} {}", g.degree, gens.join(" "))
}

/// The body text of an artifact; deterministic for a given Hopf algebra.
pub fn body(h: &FinHopf) -> String {
    let n = h.dim();
    let mut out = String::new();
    let _ = writeln!(out, "dim {n}");
    let _ = writeln!(out, "conductor {}", h.field().n());
    let p = h.provenance();
    let _ = writeln!(out, "construction {}", quoted(&p.construction));
    for (k, v) in &p.params {
        let _ = writeln!(out, "param {} {}", quoted(k), quoted(v));
    }
    match &p.structure {
        Structure::Unknown => {}
        Structure::Trivial => out.push_str("structure trivial\n"),
        Structure::GroupAlgebra(g) => {
            let _ = writeln!(out, "structure group_algebra {}", group_spec_line(g));
        }
        Structure::DualGroupAlgebra(g) => {
            let _ = writeln!(out, "structure dual_group_algebra {}", group_spec_line(g));
        }
    }
    for note in &p.notes {
        let _ = writeln!(out, "note {}", quoted(note));
    }
    for sub in &p.subobjects {
        let _ = writeln!(out, "subobject {} {} {}", quoted(&sub.name), quoted(&sub.kind), sub.basis.len());
        for v in &sub.basis {
            let _ = writeln!(out, " vector {}", v.len());
            write_vec(&mut out, v);
        }
    }
    out.push_str("labels\n");
    for l in h.labels() {
        let _ = writeln!(out, "  {}", quoted(l));
    }
    out.push_str("unit\n");
    write_vec(&mut out, h.unit());
    out.push_str("mult\n");
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.mul_basis(i, j).iter() {
                let _ = writeln!(out, "  {i} {j} {k} -> {}", c.to_literal());
            }
        }
    }
    out.push_str("comult\n");
    for (i, d) in h.comult_tensor().iter().enumerate() {
        for (jk, c) in d.iter() {
            let _ = writeln!(out, "  {i} {} {} -> {}", jk / n, jk % n, c.to_literal());
        }
    }
    out.push_str("counit\n");
    for (i, c) in h.counit_tensor().iter().enumerate() {
        if !c.is_zero() {
            let _ = writeln!(out, "  {i} -> {}", c.to_literal());
        }
    }
    out.push_str("antipode\n");
    for (i, s) in h.antipode_tensor().iter().enumerate() {
        for (j, c) in s.iter() {
            let _ = writeln!(out, "  {i} {j} -> {}", c.to_literal());
        }
    }
    out.push_str("end\n");
    out
}

/// Full artifact text: magic line, digest line, body.
pub fn serialize(h: &FinHopf) -> String {
    let body = body(h);
    format!("{MAGIC}\nsha256 {}\n{body}", digest_hex(&body))
}

pub fn save(h: &FinHopf, path: &Path) -> Result<(), CliError> {
    std::fs::write(path, serialize(h)).map_err(|e| CliError::io(path, e))
}

pub fn load(path: &Path) -> Result<FinHopf, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    deserialize(&text)
}

struct Lines<'a> {
    lines: Vec<&'a str>,
    pos: usize,
    offset: usize,
}

impl<'a> Lines<'a> {
    fn peek(&self) -> Option<&'a str> {
        self.lines.get(self.pos).copied()
    }

    fn next(&mut self) -> Result<&'a str, CliError> {
        let l = self.peek().ok_or_else(|| CliError::corrupt(self.lineno(), "unexpected end of file"))?;
        self.pos += 1;
        Ok(l)
    }

    fn lineno(&self) -> usize {
        self.pos + self.offset + 1
    }

    fn expect(&mut self, keyword: &str) -> Result<(), CliError> {
        let l = self.next()?;
        if l != keyword {
            return Err(CliError::corrupt(self.lineno() - 1, &format!("expected {keyword:?}, found {l:?}")));
        }
        Ok(())
    }

    /// Entry lines `  a b c -> literal` until the next unindented line.
    fn entries(&mut self, arity: usize, field: &Conductor) -> Result<Vec<(Vec<usize>, CycNumber)>, CliError> {
        let mut out = Vec::new();
        while let Some(l) = self.peek() {
            let Some(rest) = l.strip_prefix("  ") else { break };
            let line = self.lineno();
            self.pos += 1;
            let (idx, lit) = rest.split_once(" -> ").ok_or_else(|| CliError::corrupt(line, "missing ->"))?;
            let idx: Vec<usize> = idx
                .split(' ')
                .map(|x| x.parse().map_err(|_| CliError::corrupt(line, &format!("bad index {x:?}"))))
                .collect::<Result<_, _>>()?;
            if idx.len() != arity {
                return Err(CliError::corrupt(line, &format!("expected {arity} indices")));
            }
            let c = CycNumber::parse_literal(lit, field).map_err(|e| CliError::corrupt(line, &e.to_string()))?;
            out.push((idx, c));
        }
        Ok(out)
    }
}

fn parse_group_spec(rest: &str, line: usize) -> Result<GroupSpec, CliError> {
    let (degree, gens) = rest.split_once(' ').unwrap_or((rest, ""));
    let degree = degree.parse().map_err(|_| CliError::corrupt(line, "bad group degree"))?;
    let generators: Vec<String> = if gens.trim().is_empty() {
        Vec::new()
    } else {
        serde_json::Deserializer::from_str(gens)
            .into_iter::<String>()
            .collect::<Result<_, _>>()
            .map_err(|e| CliError::corrupt(line, &e.to_string()))?
    };
    Ok(GroupSpec { degree, generators })
}

fn split_quoted(rest: &str, count: usize, line: usize) -> Result<Vec<String>, CliError> {
    let mut out = Vec::new();
    let mut stream = serde_json::Deserializer::from_str(rest).into_iter::<serde_json::Value>();
    for _ in 0..count {
        match stream.next() {
            Some(Ok(serde_json::Value::String(s))) => out.push(s),
            Some(Ok(serde_json::Value::Number(n))) => out.push(n.to_string()),
            _ => return Err(CliError::corrupt(line, "malformed fields")),
        }
    }
    Ok(out)
}

pub fn deserialize(text: &str) -> Result<FinHopf, CliError> {
    let mut head = text.splitn(3, '\n');
    if head.next() != Some(MAGIC) {
        return Err(CliError::corrupt(1, "not an hstore artifact"));
    }
    let digest = head
        .next()
        .and_then(|l| l.strip_prefix("sha256 "))
        .ok_or_else(|| CliError::corrupt(2, "missing digest"))?;
    let body = head.next().unwrap_or("");
    if digest_hex(body) != digest {
        return Err(CliError::Corrupt(String::from("digest mismatch: artifact was modified or truncated")));
    }
    let mut lines = Lines { lines: body.lines().collect(), pos: 0, offset: 2 };
    let num = |l: &str, key: &str, line: usize| -> Result<usize, CliError> {
        l.strip_prefix(key)
            .and_then(|x| x.trim().parse().ok())
            .ok_or_else(|| CliError::corrupt(line, &format!("expected {key}")))
    };
    let n = num(lines.next()?, "dim ", lines.lineno() - 1)?;
    let conductor = num(lines.next()?, "conductor ", lines.lineno() - 1)?;
    let field = Conductor::new(conductor as u32).map_err(|e| CliError::corrupt(lines.lineno() - 1, &e.to_string()))?;
    let construction_line = lines.next()?;
    let construction = unquote(
        construction_line.strip_prefix("construction ").ok_or_else(|| CliError::corrupt(lines.lineno() - 1, "expected construction"))?,
        lines.lineno() - 1,
    )?;
    let mut prov = Provenance::new(&construction);
    loop {
        let line = lines.lineno();
        let l = lines.peek().ok_or_else(|| CliError::corrupt(line, "unexpected end of file"))?;
        if let Some(rest) = l.strip_prefix("param ") {
            lines.pos += 1;
            let kv = split_quoted(rest, 2, line)?;
            prov.params.push((kv[0].clone(), kv[1].clone()));
        } else if let Some(rest) = l.strip_prefix("structure ") {
            lines.pos += 1;
            prov.structure = if rest == "trivial" {
                Structure::Trivial
            } else if let Some(g) = rest.strip_prefix("group_algebra ") {
                Structure::GroupAlgebra(parse_group_spec(g, line)?)
            } else if let Some(g) = rest.strip_prefix("dual_group_algebra ") {
                Structure::DualGroupAlgebra(parse_group_spec(g, line)?)
            } else {
                return Err(CliError::corrupt(line, "unknown structure"));
            };
        } else if let Some(rest) = l.strip_prefix("note ") {
            lines.pos += 1;
            prov.notes.push(unquote(rest, line)?);
        } else if let Some(rest) = l.strip_prefix("subobject ") {
            lines.pos += 1;
            let f = split_quoted(rest, 3, line)?;
            let count: usize = f[2].parse().map_err(|_| CliError::corrupt(line, "bad subobject size"))?;
            let mut basis = Vec::with_capacity(count);
            for _ in 0..count {
                let vl = lines.lineno();
                lines.next()?.strip_prefix(" vector ").ok_or_else(|| CliError::corrupt(vl, "expected vector"))?;
                let entries = lines.entries(1, &field)?;
                basis.push(SparseVec::from_terms(entries.into_iter().map(|(i, c)| (i[0], c))));
            }
            prov.subobjects.push(Subobject { name: f[0].clone(), kind: f[1].clone(), basis });
        } else {
            break;
        }
    }
    lines.expect("labels")?;
    let mut labels = Vec::with_capacity(n);
    while let Some(l) = lines.peek().and_then(|l| l.strip_prefix("  ")) {
        labels.push(unquote(l, lines.lineno())?);
        lines.pos += 1;
    }
    lines.expect("unit")?;
    let unit = SparseVec::from_terms(lines.entries(1, &field)?.into_iter().map(|(i, c)| (i[0], c)));
    let check = |i: &[usize], line: usize| -> Result<(), CliError> {
        if i.iter().any(|&x| x >= n) {
            return Err(CliError::corrupt(line, "index out of range"));
        }
        Ok(())
    };
    lines.expect("mult")?;
    let line = lines.lineno();
    let mut mult: Vec<Vec<(usize, CycNumber)>> = vec![Vec::new(); n * n];
    for (i, c) in lines.entries(3, &field)? {
        check(&i, line)?;
        mult[i[0] * n + i[1]].push((i[2], c));
    }
    lines.expect("comult")?;
    let line = lines.lineno();
    let mut comult: Vec<Vec<(usize, CycNumber)>> = vec![Vec::new(); n];
    for (i, c) in lines.entries(3, &field)? {
        check(&i, line)?;
        comult[i[0]].push((i[1] * n + i[2], c));
    }
    lines.expect("counit")?;
    let line = lines.lineno();
    let mut counit = vec![field.zero(); n];
    for (i, c) in lines.entries(1, &field)? {
        check(&i, line)?;
        counit[i[0]] = c;
    }
    lines.expect("antipode")?;
    let line = lines.lineno();
    let mut antipode: Vec<Vec<(usize, CycNumber)>> = vec![Vec::new(); n];
    for (i, c) in lines.entries(2, &field)? {
        check(&i, line)?;
        antipode[i[0]].push((i[1], c));
    }
    lines.expect("end")?;
    let h = FinHopf::from_parts(HopfParts {
        field,
        labels,
        mult: mult.into_iter().map(SparseVec::from_terms).collect(),
        unit,
        comult: comult.into_iter().map(SparseVec::from_terms).collect(),
        counit,
        antipode: antipode.into_iter().map(SparseVec::from_terms).collect(),
        provenance: prov,
    })
    .map_err(|e| CliError::Corrupt(e.to_string()))?;
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopf_core::groups::PermGroup;
    use hopf_core::hopf::{dual_group_algebra, group_algebra};

    #[test]
    fn group_algebra_round_trip() {
        let k = Conductor::new(4).unwrap();
        let h = group_algebra(&PermGroup::symmetric(3).unwrap(), &k);
        let text = serialize(&h);
        let back = deserialize(&text).unwrap();
        assert!(back.structure_eq(&h));
        assert_eq!(back.provenance(), h.provenance());
        assert_eq!(serialize(&back), text);
    }

    #[test]
    fn tampered_artifact_is_rejected() {
        let k = Conductor::new(4).unwrap();
        let h = dual_group_algebra(&PermGroup::cyclic(3), &k);
        let text = serialize(&h).replacen("counit\n", "counit\n  1 -> cyc(N=4)[1, 0]\n", 1);
        assert!(matches!(deserialize(&text), Err(CliError::Corrupt(_))));
    }
}
