#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "serieslab/core.hpp"
#include "serieslab/power_series.hpp"
#include "serieslab/unordered_sums.hpp"

namespace serieslab {

/// Parses a series document: JSON object with "center" ([re, im], default
/// [0, 0]) and either explicit "coeffs" ([[re, im] | number, ...]) or a
/// "generator" object {"name": ..., "params": {...}} materialized at
/// "trunc_order" (default cfg.trunc_order).  When both are present, coeffs
/// win.  Empty coeffs, unknown fields of the wrong shape, or non-finite
/// numbers -> ParseError/DomainError.
PowerSeries parse_series_document(const std::string& text,
                                  const NumericConfig& cfg);
PowerSeries read_series_file(const std::string& path, const NumericConfig& cfg);

/// Canonical JSON rendering: object keys sorted, complex numbers always
/// [re, im], shortest round-trip number formatting, single trailing newline.
/// Coefficients are always written explicitly; the source generator, when
/// known, is recorded alongside (coeffs win on re-parse).
std::string serialize_series_document(const PowerSeries& f);
void write_series_file(const std::string& path, const PowerSeries& f);

/// Parses a family document: {"kind": "naturals", "generator": {...}} |
/// {"kind": "pairs", "row": {...}, "col": {...}, "order"?, "seed"?} |
/// {"kind": "finite", "terms": [[re, im] | number, ...]}.  A pair term is
/// row.term(n) * col.term(m).
Family parse_family_document(const std::string& text, const NumericConfig& cfg);
Family read_family_file(const std::string& path, const NumericConfig& cfg);

/// One CSV row per sample of a series evaluation.
struct EvalRow {
  Complex z;
  Complex value;
  double tail_hint = 0.0;
};

/// CSV with header z_re,z_im,f_re,f_im,tail_hint; 17 significant digits.
std::string eval_rows_csv(const std::vector<EvalRow>& rows);

/// 17-significant-digit rendering used by all CSV output.
std::string format_sig17(double x);

/// FNV-1a 64-bit digest of a byte string, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// Reads a whole file (DomainError when unreadable).
std::string slurp_file(const std::string& path);

/// "start:stop:step" -> inclusive grid (stop included within half-step
/// slack).  step must be nonzero and oriented toward stop.
std::vector<double> parse_grid(const std::string& spec);

/// Parses "re" or "re,im" into a complex scalar.
Complex parse_complex(const std::string& text);

}  // namespace serieslab
