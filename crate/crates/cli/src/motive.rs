use std::io::Write;

use serde_json::json;
use tkmotive_core::{
    agl2_breakdown, gl2_breakdown, group_motive, FormulaSet, MotiveGroup, QPolynomial,
    TorusKnotParams,
};

use crate::args::{MotiveArgs, MotiveFormat};
use crate::render::{self, Row};
use crate::{Failure, EXIT_OK};

/// Everything `motive` can print for one knot and group.
pub struct Listing {
    pub params: TorusKnotParams,
    pub group: MotiveGroup,
    pub set: FormulaSet,
    pub total: QPolynomial,
    pub strata: Vec<Row>,
    pub totals: Vec<Row>,
}

impl Listing {
    pub fn build(
        params: TorusKnotParams,
        group: MotiveGroup,
        set: FormulaSet,
        with_strata: bool,
    ) -> Result<Self, Failure> {
        let (strata, totals) = match (with_strata, group) {
            (false, _) => (Vec::new(), Vec::new()),
            (true, MotiveGroup::Agl2) => render::breakdown_rows(&agl2_breakdown(&params, set)?),
            (true, MotiveGroup::Gl2) => {
                let rows = gl2_breakdown(&params, set)?
                    .into_iter()
                    .map(|(g, p)| Row::new(g.as_str(), p))
                    .collect();
                (rows, Vec::new())
            }
            (true, g) => {
                return Err(
                    format!("--strata is available for agl2 and gl2, not {}", g.as_str()).into(),
                )
            }
        };
        let total = group_motive(&params, group, set)?;
        Ok(Self {
            params,
            group,
            set,
            total,
            strata,
            totals,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = json!({
            "m": self.params.m(),
            "n": self.params.n(),
            "group": self.group.as_str(),
            "formulas": self.set.as_str(),
            "degree": render::degree_json(&self.total),
            "polynomial": self.total.to_json(),
        });
        if !self.strata.is_empty() {
            v["strata"] = render::rows_json(&self.strata);
        }
        if !self.totals.is_empty() {
            v["totals"] = render::rows_json(&self.totals);
        }
        v
    }

    fn all_rows(&self) -> Vec<Row> {
        let mut rows: Vec<Row> = self
            .strata
            .iter()
            .map(|r| Row::new(r.name.clone(), r.poly.clone()))
            .collect();
        rows.extend(
            self.totals
                .iter()
                .map(|r| Row::new(format!("total-{}", r.name), r.poly.clone())),
        );
        rows.push(Row::new("total", self.total.clone()));
        rows
    }

    pub fn render(&self, format: MotiveFormat) -> Result<String, Failure> {
        Ok(match format {
            MotiveFormat::Human if self.strata.is_empty() => format!("{}\n", self.total),
            MotiveFormat::Human => format!(
                "{} of torus knot {} ({} formulas)\n{}",
                self.group.as_str(),
                self.params,
                self.set.as_str(),
                render::human_table(&self.all_rows())
            ),
            MotiveFormat::Json => format!("{}\n", serde_json::to_string_pretty(&self.to_json())?),
            MotiveFormat::Latex if self.strata.is_empty() => format!("{}\n", self.total.to_latex()),
            MotiveFormat::Latex => render::latex_aligned(&self.all_rows()),
            MotiveFormat::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["m", "n", "group", "name", "degree", "coefficients"])?;
                let (m, n) = (self.params.m().to_string(), self.params.n().to_string());
                for row in self.all_rows() {
                    w.write_record([
                        m.as_str(),
                        n.as_str(),
                        self.group.as_str(),
                        row.name.as_str(),
                        render::degree_field(&row.poly).as_str(),
                        row.poly.to_semicolon_list().as_str(),
                    ])?;
                }
                String::from_utf8(w.into_inner().map_err(|e| e.to_string())?)?
            }
        })
    }
}

pub fn run(args: &MotiveArgs, out: &mut dyn Write) -> Result<u8, Failure> {
    let params = TorusKnotParams::new(args.m, args.n)?;
    let listing = Listing::build(params, args.group.into(), args.formulas.into(), args.strata)?;
    out.write_all(listing.render(args.format)?.as_bytes())?;
    Ok(EXIT_OK)
}
