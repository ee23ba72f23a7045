//! graph6 and DOT text formats.
//!
//! graph6 stores the order followed by the upper triangle of the adjacency
//! matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed
//! big-endian into 6-bit groups, each offset by 63 into printable ASCII.

use std::fmt::Write;

use super::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;
const MAX_ORDER: u64 = 68_719_476_735;

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    push_order(&mut out, n as u64);

    let mut group = 0u8;
    let mut bits = 0;
    for v in 1..n {
        for u in 0..v {
            group = (group << 1) | u8::from(g.has_edge(u, v));
            bits += 1;
            if bits == 6 {
                out.push((group + BIAS) as char);
                group = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(((group << (6 - bits)) + BIAS) as char);
    }
    out
}

fn push_order(out: &mut String, n: u64) {
    assert!(n <= MAX_ORDER, "graph6 cannot encode order {n}");
    let groups = if n <= 62 {
        out.push((n as u8 + BIAS) as char);
        return;
    } else if n <= 258_047 {
        out.push('~');
        3
    } else {
        out.push_str("~~");
        6
    };
    for i in (0..groups).rev() {
        out.push((((n >> (6 * i)) & 0x3f) as u8 + BIAS) as char);
    }
}

pub fn decode_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.as_bytes();
    let mut pos = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let mut end = bytes.len();
    while end > pos && (bytes[end - 1] == b'\n' || bytes[end - 1] == b'\r') {
        end -= 1;
    }
    let err = |offset, reason| GraphError::Parse { offset, reason };

    let sextet = |i: usize| -> Result<u64, GraphError> {
        match bytes.get(i) {
            Some(&b) if (BIAS..=BIAS + 63).contains(&b) && i < end => Ok((b - BIAS) as u64),
            Some(_) if i < end => Err(err(i, "byte outside the graph6 range 63..=126")),
            _ => Err(err(i, "unexpected end of input")),
        }
    };

    let n = match sextet(pos)? {
        63 => {
            let (start, groups) = if sextet(pos + 1)? == 63 { (pos + 2, 6) } else { (pos + 1, 3) };
            let mut n = 0u64;
            for i in 0..groups {
                n = (n << 6) | sextet(start + i)?;
            }
            pos = start + groups;
            n
        }
        small => {
            pos += 1;
            small
        }
    };
    if n == 0 {
        return Err(err(0, "graphs must have at least one vertex"));
    }
    let n = usize::try_from(n).map_err(|_| err(0, "order exceeds address space"))?;

    let pairs = n * (n - 1) / 2;
    let needed = pairs.div_ceil(6);
    if end - pos < needed {
        return Err(err(end, "unexpected end of input"));
    }
    if end - pos > needed {
        return Err(err(pos + needed, "trailing data after adjacency bits"));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = sextet(pos + k / 6)?;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.insert_edge(u, v);
            }
            k += 1;
            if k == pairs {
                break 'outer;
            }
        }
    }
    Ok(g)
}

/// DOT `graph` block listing every vertex, then every edge `u -- v;`.
pub fn export_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
