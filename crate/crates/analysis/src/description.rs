//! Finite descriptions of gliders: period, generic turning rule, width.

use std::fmt;
use std::str::FromStr;

use sca_core::{Generation, GenericRule, ParseError, RuleKind};

use crate::glider::{is_nested_under, NotNested};
use crate::period::Period;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GliderDescription {
    pub period: Period,
    pub turning: GenericRule,
    pub width: usize,
}

impl GliderDescription {
    /// Describes a nested glider; the rule is the meet over its leading
    /// subpatterns.
    pub fn of(period: Period) -> Result<Self, NotNested> {
        let turning = is_nested_under(&period)?;
        let width = period.width();
        Ok(GliderDescription {
            period,
            turning,
            width,
        })
    }

    /// One description per distinct rotation, all sharing this rule and width.
    pub fn shifts(&self) -> Vec<GliderDescription> {
        self.period
            .shift_set()
            .into_iter()
            .map(|period| GliderDescription {
                period,
                turning: self.turning,
                width: self.width,
            })
            .collect()
    }

    /// Representative of the shift class.
    pub fn canonical(&self) -> GliderDescription {
        GliderDescription {
            period: self.period.canonical_rotation(),
            turning: self.turning,
            width: self.width,
        }
    }

    /// Mirror image: reflected period and rule.
    pub fn mirrored(&self) -> GliderDescription {
        GliderDescription {
            period: self.period.mirrored(),
            turning: self.turning.mirrored(),
            width: self.width,
        }
    }
}

impl fmt::Display for GliderDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "period={} ; turn={} ; width={} ; speed={}",
            self.period,
            self.turning,
            self.width,
            self.period.speed()
        )
    }
}

fn field<'a>(part: Option<&'a str>, name: &str, line: &str) -> Result<&'a str, ParseError> {
    part.map(str::trim)
        .and_then(|p| p.strip_prefix(name))
        .and_then(|p| p.strip_prefix('='))
        .ok_or_else(|| ParseError::new(0, 1, line, format!("expected `{name}=`")))
}

impl FromStr for GliderDescription {
    type Err = ParseError;

    /// Reads the line format written by `Display`. Width and speed are checked
    /// against the period.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split(" ; ");
        let period_txt = field(parts.next(), "period", s)?;
        let turn_txt = field(parts.next(), "turn", s)?;
        let width_txt = field(parts.next(), "width", s)?;
        let speed_txt = field(parts.next(), "speed", s)?;
        let gens = period_txt
            .split(';')
            .map(|g| g.trim().parse::<Generation>())
            .collect::<Result<Vec<_>, _>>()?;
        let period = Period::from_generations(gens)
            .map_err(|e| ParseError::new(0, 1, period_txt, e.to_string()))?;
        let turning = GenericRule::parse(RuleKind::Turning, turn_txt.trim())?;
        let width: usize = width_txt
            .trim()
            .parse()
            .map_err(|_| ParseError::new(0, 1, width_txt, "bad width"))?;
        if width != period.width() {
            return Err(ParseError::new(
                0,
                1,
                width_txt,
                "width does not match the period",
            ));
        }
        if speed_txt.trim() != period.speed().to_string() {
            return Err(ParseError::new(
                0,
                1,
                speed_txt,
                "speed does not match the period",
            ));
        }
        Ok(GliderDescription {
            period,
            turning,
            width,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::period::find_period;
    use sca_core::{CrossingRule, TurningRule};

    #[test]
    fn line_round_trip() {
        let t: TurningRule = "000100000".parse().unwrap();
        let p = find_period(&"@0 s-".parse().unwrap(), t, CrossingRule::ZERO, 10)
            .unwrap()
            .period;
        let d = GliderDescription::of(p).unwrap();
        let line = d.to_string();
        assert_eq!(
            line,
            "period=@0 s-;@-1 -l;@-2 -s ; turn=X0X100XXX ; width=1 ; speed=1/3"
        );
        assert_eq!(line.parse::<GliderDescription>().unwrap(), d);
        assert_eq!(d.shifts().len(), 3);
        assert!("period=@0 s- ; turn=X0X100XXX ; width=1 ; speed=1/1"
            .parse::<GliderDescription>()
            .is_err());
    }
}
