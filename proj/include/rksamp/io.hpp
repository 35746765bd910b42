#pragma once

// File formats: JSON model and state descriptions, CSV point sets, and the
// small parsing helpers shared by the CLI, tests, and bindings.  All numeric
// output uses %.17g so round-trips are bit-faithful.

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rksamp/kernel_core.hpp"

namespace rksamp {

struct LoadedModel {
    std::unique_ptr<Model> model;
    std::string type;  // "jacobi" | "pw"
};

// Model descriptions:
//   {"type":"jacobi", "rule":"free"|"chebyshev"|"power:<p>", "N":8}
//   {"type":"jacobi", "b":[...], "q":[...], "N":8}          (N optional: len(q))
//   {"type":"pw", "a":6.283, "cutoff":8}
// Giving both "rule" and arrays is an input error.  n_override (the CLI's --N)
// wins over the file's "N".
LoadedModel load_model_text(const std::string& json_text,
                            std::optional<std::size_t> n_override = {});
LoadedModel load_model_file(const std::string& path,
                            std::optional<std::size_t> n_override = {});

// State files.  Jacobi: {"coeffs":[{"re":..,"im":..}, ...]} with exactly
// dimension() entries.  PW: {"a":.., "modes":[{"k":..,"re":..,"im":..}, ...]}
// with |k| <= cutoff and a matching the model; unlisted modes are zero.
StateVector load_state_text(const std::string& json_text, const Model& model);
StateVector load_state_file(const std::string& path, const Model& model);

// Point-set CSV with header "index,x,kernel_norm,weight".
void write_points_csv(std::ostream& out, const SamplingSet& set);
SamplingSet read_points_csv(std::istream& in);

// Grid description "lo:hi:count" or "lo:hi:count,imag": count points evenly
// spaced on [lo, hi], shifted by imag * i.
std::vector<Complex> parse_grid(const std::string& text);

std::string format_g17(double x);

}  // namespace rksamp
