//! Space descriptors:
//! `sphere:<dim>` | `surface:g=<g>` | `surface:g=<g>,k=<k>` | `cp:<n>` |
//! `rp2` | `betti:<b0>,<b1>,...`

use thiserror::Error;

use symprod_core::SpaceSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid space descriptor at position {position}: {message}")]
pub struct DescriptorError {
    pub position: usize,
    pub message: String,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, DescriptorError> {
    Err(DescriptorError {
        position,
        message: message.into(),
    })
}

fn parse_number(token: &str, position: usize, what: &str) -> Result<u64, DescriptorError> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return err(position, format!("expected {what}, found `{token}`"));
    }
    token
        .parse()
        .or_else(|_| err(position, format!("{what} `{token}` is too large")))
}

fn parse_u32(token: &str, position: usize, what: &str) -> Result<u32, DescriptorError> {
    let v = parse_number(token, position, what)?;
    u32::try_from(v).or_else(|_| err(position, format!("{what} `{token}` is too large")))
}

pub fn parse_descriptor(s: &str) -> Result<SpaceSpec, DescriptorError> {
    if let Some(pos) = s.find(char::is_whitespace) {
        return err(pos, "whitespace is not allowed in a descriptor");
    }
    if s == "rp2" {
        return Ok(SpaceSpec::RealProjectivePlane);
    }
    let Some(colon) = s.find(':') else {
        return err(0, format!("unknown descriptor `{s}`"));
    };
    let (kind, body) = (&s[..colon], &s[colon + 1..]);
    let start = colon + 1;
    match kind {
        "sphere" => {
            let dim = parse_u32(body, start, "sphere dimension")?;
            if dim == 0 {
                return err(start, "sphere dimension must be positive");
            }
            Ok(SpaceSpec::Sphere(dim))
        }
        "cp" => Ok(SpaceSpec::ComplexProjective(parse_u32(
            body,
            start,
            "complex dimension",
        )?)),
        "surface" => parse_surface(body, start),
        "betti" => {
            let mut betti = Vec::new();
            let mut offset = start;
            for token in body.split(',') {
                betti.push(parse_number(token, offset, "Betti number")?);
                offset += token.len() + 1;
            }
            Ok(SpaceSpec::RawBetti(betti))
        }
        _ => err(0, format!("unknown space kind `{kind}`")),
    }
}

fn parse_surface(body: &str, start: usize) -> Result<SpaceSpec, DescriptorError> {
    let mut genus = None;
    let mut punctures = None;
    let mut offset = start;
    for field in body.split(',') {
        let Some((key, value)) = field.split_once('=') else {
            return err(
                offset,
                format!("expected `g=<g>` or `k=<k>`, found `{field}`"),
            );
        };
        let value_pos = offset + key.len() + 1;
        let slot = match key {
            "g" => &mut genus,
            "k" => &mut punctures,
            _ => return err(offset, format!("unknown surface parameter `{key}`")),
        };
        if slot.is_some() {
            return err(offset, format!("repeated surface parameter `{key}`"));
        }
        *slot = Some(parse_u32(value, value_pos, key)?);
        offset += field.len() + 1;
    }
    let Some(genus) = genus else {
        return err(start, "surface descriptor requires g=<genus>");
    };
    match punctures {
        None => Ok(SpaceSpec::ClosedSurface { genus }),
        Some(0) => err(start, "k must be positive; omit k for a closed surface"),
        Some(punctures) => Ok(SpaceSpec::PuncturedSurface { genus, punctures }),
    }
}
