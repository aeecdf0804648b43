//! Rendering for the CLI. Big integers cross the boundary as decimal strings
//! in JSON and CSV; pretty layouts follow the triangle/matrix orientation
//! with blanks for zero cells.

use std::io::{self, Write};

use num_bigint::BigUint;
use serde::Serialize;

use crate::catalan::{ConvolutionMatrix, Decomposition};
use crate::oracle::DyckWords;
use crate::triangle::TriangleTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Pretty,
    Json,
    Csv,
}

#[derive(Serialize)]
struct NodeRecord {
    i: usize,
    j: usize,
    value: String,
}

#[derive(Serialize)]
struct MatrixRecord {
    n: usize,
    j: usize,
    value: String,
}

#[derive(Serialize)]
struct DecompositionRecord {
    n: usize,
    catalan: String,
    terms: Vec<String>,
    squares: Vec<String>,
}

pub(crate) fn triangle(
    out: &mut impl Write,
    table: &TriangleTable,
    format: OutputFormat,
) -> io::Result<()> {
    match format {
        OutputFormat::Pretty => pretty_triangle(out, table),
        OutputFormat::Json => {
            let records: Vec<NodeRecord> = table
                .nodes()
                .map(|(node, label)| NodeRecord {
                    i: node.i,
                    j: node.j,
                    value: label.to_string(),
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string(&records)?)
        }
        OutputFormat::Csv => {
            writeln!(out, "i,j,value")?;
            for (node, label) in table.nodes() {
                writeln!(out, "{},{},{}", node.i, node.j, label)?;
            }
            Ok(())
        }
    }
}

/// Columns i left to right, unbalance j decreasing down the page, i-axis
/// labels along the bottom.
fn pretty_triangle(out: &mut impl Write, table: &TriangleTable) -> io::Result<()> {
    let i_max = table.i_max();
    let mut cells = vec![vec![String::new(); i_max + 1]; i_max + 1]; // [j][i]
    for (node, label) in table.nodes() {
        cells[node.j][node.i] = label.to_string();
    }
    let mut widths: Vec<usize> = (0..=i_max).map(|i| i.to_string().len()).collect();
    for row in &cells {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let gutter = i_max.to_string().len();
    for j in (0..=i_max).rev() {
        let mut line = format!("{j:>gutter$}");
        for i in 0..=i_max {
            line.push_str(&format!("  {:>width$}", cells[j][i], width = widths[i]));
        }
        writeln!(out, "{}", line.trim_end())?;
    }
    let mut axis = " ".repeat(gutter);
    for (i, width) in widths.iter().enumerate() {
        axis.push_str(&format!("  {i:>width$}"));
    }
    writeln!(out, "{}", axis.trim_end())
}

pub(crate) fn decomposition(
    out: &mut impl Write,
    decomposition: &Decomposition,
    format: OutputFormat,
) -> io::Result<()> {
    match format {
        OutputFormat::Pretty => {
            writeln!(out, "n = {}", decomposition.n)?;
            writeln!(out, "catalan = {}", decomposition.catalan)?;
            let squares = decomposition.squares();
            let term_width = column_width(decomposition.terms.iter(), "term".len());
            let k_width = (decomposition.terms.len() - 1).to_string().len().max(1);
            writeln!(out, "{:>k_width$}  {:>term_width$}  square", "k", "term")?;
            for (k, (term, square)) in decomposition.terms.iter().zip(&squares).enumerate() {
                writeln!(out, "{k:>k_width$}  {term:>term_width$}  {square}")?;
            }
            writeln!(out, "sum of squares = {}", decomposition.sum_of_squares())
        }
        OutputFormat::Json => {
            let record = DecompositionRecord {
                n: decomposition.n,
                catalan: decomposition.catalan.to_string(),
                terms: decomposition.terms.iter().map(BigUint::to_string).collect(),
                squares: decomposition
                    .squares()
                    .iter()
                    .map(BigUint::to_string)
                    .collect(),
            };
            writeln!(out, "{}", serde_json::to_string(&record)?)
        }
        OutputFormat::Csv => {
            writeln!(out, "n,k,term,square")?;
            for (k, (term, square)) in decomposition
                .terms
                .iter()
                .zip(decomposition.squares())
                .enumerate()
            {
                writeln!(out, "{},{},{},{}", decomposition.n, k, term, square)?;
            }
            Ok(())
        }
    }
}

pub(crate) fn convolution(
    out: &mut impl Write,
    matrix: &ConvolutionMatrix,
    format: OutputFormat,
) -> io::Result<()> {
    match format {
        OutputFormat::Pretty => pretty_convolution(out, matrix),
        OutputFormat::Json => {
            let mut records = Vec::new();
            for n in 0..=matrix.n_max() {
                for j in 0..=matrix.j_max() {
                    records.push(MatrixRecord {
                        n,
                        j,
                        value: matrix.get(n, j).expect("inside the grid").to_string(),
                    });
                }
            }
            writeln!(out, "{}", serde_json::to_string(&records)?)
        }
        OutputFormat::Csv => {
            writeln!(out, "n,j,value")?;
            for n in 0..=matrix.n_max() {
                for j in 0..=matrix.j_max() {
                    writeln!(
                        out,
                        "{},{},{}",
                        n,
                        j,
                        matrix.get(n, j).expect("inside the grid")
                    )?;
                }
            }
            Ok(())
        }
    }
}

/// n across the page, j increasing downward, zeros left blank.
fn pretty_convolution(out: &mut impl Write, matrix: &ConvolutionMatrix) -> io::Result<()> {
    let zero = BigUint::from(0u32);
    let cell = |n: usize, j: usize| {
        let value = matrix.get(n, j).expect("inside the grid");
        if *value == zero {
            String::new()
        } else {
            value.to_string()
        }
    };
    let mut widths: Vec<usize> = (0..=matrix.n_max()).map(|n| n.to_string().len()).collect();
    for (n, width) in widths.iter_mut().enumerate() {
        for j in 0..=matrix.j_max() {
            *width = (*width).max(cell(n, j).len());
        }
    }
    let gutter = matrix.j_max().to_string().len();
    let mut axis = " ".repeat(gutter);
    for (n, width) in widths.iter().enumerate() {
        axis.push_str(&format!("  {n:>width$}"));
    }
    writeln!(out, "{}", axis.trim_end())?;
    for j in 0..=matrix.j_max() {
        let mut line = format!("{j:>gutter$}");
        for (n, width) in widths.iter().enumerate() {
            line.push_str(&format!("  {:>width$}", cell(n, j)));
        }
        writeln!(out, "{}", line.trim_end())?;
    }
    Ok(())
}

pub(crate) fn words(
    out: &mut impl Write,
    words: DyckWords,
    format: OutputFormat,
) -> io::Result<()> {
    match format {
        OutputFormat::Pretty => {
            for word in words {
                writeln!(out, "{word}")?;
            }
            Ok(())
        }
        OutputFormat::Csv => {
            writeln!(out, "word")?;
            for word in words {
                writeln!(out, "{word}")?;
            }
            Ok(())
        }
        OutputFormat::Json => {
            // streamed by hand so C_n words are never held at once
            write!(out, "[")?;
            for (idx, word) in words.enumerate() {
                if idx > 0 {
                    write!(out, ",")?;
                }
                write!(out, "\"{word}\"")?;
            }
            writeln!(out, "]")
        }
    }
}

fn column_width<'a>(values: impl Iterator<Item = &'a BigUint>, floor: usize) -> usize {
    values.map(|v| v.to_string().len()).fold(floor, usize::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalan;
    use crate::oracle;

    fn render<F>(f: F) -> String
    where
        F: FnOnce(&mut Vec<u8>) -> io::Result<()>,
    {
        let mut buf = Vec::new();
        f(&mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn pretty_triangle_small_layout() {
        let table = TriangleTable::build(4).unwrap();
        let text = render(|out| triangle(out, &table, OutputFormat::Pretty));
        let rows: Vec<Vec<&str>> = text
            .lines()
            .map(|l| l.split_whitespace().collect())
            .collect();
        assert_eq!(rows[0], vec!["4", "1"]);
        assert_eq!(rows[2], vec!["2", "1", "3"]);
        assert_eq!(rows[4], vec!["0", "1", "1", "2"]);
        assert_eq!(rows[5], vec!["0", "1", "2", "3", "4"]);
    }

    #[test]
    fn triangle_csv_lists_nodes_with_j_descending() {
        let table = TriangleTable::build(2).unwrap();
        let text = render(|out| triangle(out, &table, OutputFormat::Csv));
        assert_eq!(text, "i,j,value\n0,0,1\n1,1,1\n2,2,1\n2,0,1\n");
    }

    #[test]
    fn single_node_triangle_json() {
        let table = TriangleTable::build(0).unwrap();
        let text = render(|out| triangle(out, &table, OutputFormat::Json));
        assert_eq!(text, "[{\"i\":0,\"j\":0,\"value\":\"1\"}]\n");
    }

    #[test]
    fn decomposition_json_shape() {
        let d = catalan::decompose(7).unwrap();
        let text = render(|out| decomposition(out, &d, OutputFormat::Json));
        assert_eq!(
            text,
            "{\"n\":7,\"catalan\":\"429\",\"terms\":[\"1\",\"6\",\"14\",\"14\"],\
             \"squares\":[\"1\",\"36\",\"196\",\"196\"]}\n"
        );
    }

    #[test]
    fn words_render_in_every_format() {
        let two = || oracle::enumerate(2).unwrap();
        assert_eq!(
            render(|out| words(out, two(), OutputFormat::Pretty)),
            "(())\n()()\n"
        );
        assert_eq!(
            render(|out| words(out, two(), OutputFormat::Csv)),
            "word\n(())\n()()\n"
        );
        assert_eq!(
            render(|out| words(out, two(), OutputFormat::Json)),
            "[\"(())\",\"()()\"]\n"
        );
        let empty = oracle::enumerate(0).unwrap();
        assert_eq!(
            render(|out| words(out, empty, OutputFormat::Json)),
            "[\"\"]\n"
        );
    }
}
