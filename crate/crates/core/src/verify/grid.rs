use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    Log,
}

/// Sample points `start..=stop`, evenly spaced in x or in log x.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub spacing: Spacing,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GridError {
    #[error("grid needs start < stop (got {0} and {1})")]
    Order(f64, f64),
    #[error("grid needs at least 2 points (got {0})")]
    Count(usize),
    #[error("log spacing needs start > 0 (got {0})")]
    LogStart(f64),
    #[error("malformed grid '{0}', expected start:stop:count or start:stop:countL")]
    Syntax(String),
}

impl Grid {
    pub fn new(start: f64, stop: f64, count: usize, spacing: Spacing) -> Result<Grid, GridError> {
        if !(start < stop) || !start.is_finite() || !stop.is_finite() {
            return Err(GridError::Order(start, stop));
        }
        if count < 2 {
            return Err(GridError::Count(count));
        }
        if spacing == Spacing::Log && !(start > 0.0) {
            return Err(GridError::LogStart(start));
        }
        Ok(Grid { start, stop, count, spacing })
    }

    /// Linear grid; panics on invalid bounds (for fixed, known-good grids).
    pub fn linear(start: f64, stop: f64, count: usize) -> Grid {
        Grid::new(start, stop, count, Spacing::Linear).expect("valid linear grid")
    }

    /// Log-spaced grid; panics on invalid bounds.
    pub fn log(start: f64, stop: f64, count: usize) -> Grid {
        Grid::new(start, stop, count, Spacing::Log).expect("valid log grid")
    }

    pub fn points(&self) -> Vec<f64> {
        let n = self.count - 1;
        (0..=n)
            .map(|i| {
                if i == n {
                    return self.stop;
                }
                let t = i as f64 / n as f64;
                match self.spacing {
                    Spacing::Linear => self.start + t * (self.stop - self.start),
                    Spacing::Log => (self.start.ln() + t * (self.stop.ln() - self.start.ln())).exp(),
                }
            })
            .collect()
    }
}

impl FromStr for Grid {
    type Err = GridError;

    fn from_str(s: &str) -> Result<Grid, GridError> {
        let syntax = || GridError::Syntax(s.to_string());
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, n] = parts.as_slice() else {
            return Err(syntax());
        };
        let (n, spacing) = match n.strip_suffix('L') {
            Some(rest) => (rest, Spacing::Log),
            None => (*n, Spacing::Linear),
        };
        let start: f64 = a.trim().parse().map_err(|_| syntax())?;
        let stop: f64 = b.trim().parse().map_err(|_| syntax())?;
        let count: usize = n.trim().parse().map_err(|_| syntax())?;
        Grid::new(start, stop, count, spacing)
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let suffix = if self.spacing == Spacing::Log { "L" } else { "" };
        write!(f, "{}:{}:{}{}", self.start, self.stop, self.count, suffix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_spacings() {
        let g: Grid = "-0.9:0.99:50".parse().unwrap();
        assert_eq!(g, Grid::linear(-0.9, 0.99, 50));
        let p = g.points();
        assert_eq!(p.len(), 50);
        assert_eq!((p[0], p[49]), (-0.9, 0.99));
        let g: Grid = "0.1:100:3L".parse().unwrap();
        let p = g.points();
        assert!((p[1] - 10f64.sqrt()).abs() < 1e-12);
        assert_eq!(g.to_string(), "0.1:100:3L");
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(matches!("1:0:5".parse::<Grid>(), Err(GridError::Order(..))));
        assert!(matches!("0:1:1".parse::<Grid>(), Err(GridError::Count(1))));
        assert!(matches!("0:1:5L".parse::<Grid>(), Err(GridError::LogStart(_))));
        assert!(matches!("0:1".parse::<Grid>(), Err(GridError::Syntax(_))));
        assert!(matches!("a:1:4".parse::<Grid>(), Err(GridError::Syntax(_))));
    }
}
