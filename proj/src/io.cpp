#include "rksamp/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rksamp/jacobi.hpp"
#include "rksamp/pw.hpp"

namespace rksamp {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string(what) + ": " + e.what());
    }
}

LoadedModel load_jacobi(const json& j, std::optional<std::size_t> n_override) {
    const bool has_rule = j.contains("rule");
    const bool has_arrays = j.contains("b") || j.contains("q");
    if (has_rule && has_arrays)
        throw std::invalid_argument("jacobi model: give either a rule or arrays, not both");
    if (!has_rule && !has_arrays)
        throw std::invalid_argument("jacobi model: missing rule or coefficient arrays");

    JacobiCoefficients coeffs = JacobiCoefficients::free_rule();
    std::optional<std::size_t> n_from_arrays;
    if (has_rule) {
        coeffs = JacobiCoefficients::from_rule(j.at("rule").get<std::string>());
    } else {
        if (!j.contains("b") || !j.contains("q"))
            throw std::invalid_argument("jacobi model: both b and q arrays are required");
        auto b = j.at("b").get<std::vector<double>>();
        auto q = j.at("q").get<std::vector<double>>();
        n_from_arrays = std::min(b.size(), q.size());
        coeffs = JacobiCoefficients::from_arrays(std::move(b), std::move(q));
    }

    std::size_t n = 0;
    if (n_override) {
        n = *n_override;
    } else if (j.contains("N")) {
        n = j.at("N").get<std::size_t>();
    } else if (n_from_arrays) {
        n = *n_from_arrays;
    } else {
        throw std::invalid_argument("jacobi model: rule-based models need N");
    }

    LoadedModel out;
    out.model = std::make_unique<JacobiModel>(std::move(coeffs), n);
    out.type = "jacobi";
    return out;
}

LoadedModel load_pw(const json& j) {
    PWConfig cfg;
    cfg.a = j.at("a").get<double>();
    cfg.cutoff = j.at("cutoff").get<std::size_t>();
    LoadedModel out;
    out.model = std::make_unique<PWModel>(cfg);
    out.type = "pw";
    return out;
}

}  // namespace

LoadedModel load_model_text(const std::string& json_text,
                            std::optional<std::size_t> n_override) {
    const json j = parse_json(json_text, "model file");
    try {
        const std::string type = j.at("type").get<std::string>();
        if (type == "jacobi") return load_jacobi(j, n_override);
        if (type == "pw") return load_pw(j);
        throw std::invalid_argument("model file: unknown type '" + type + "'");
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("model file: ") + e.what());
    }
}

LoadedModel load_model_file(const std::string& path,
                            std::optional<std::size_t> n_override) {
    return load_model_text(slurp(path), n_override);
}

StateVector load_state_text(const std::string& json_text, const Model& model) {
    const json j = parse_json(json_text, "state file");
    StateVector phi;
    phi.basis_tag = model.basis_tag();
    try {
        if (const auto* pw = dynamic_cast<const PWModel*>(&model)) {
            const double a = j.at("a").get<double>();
            if (a != pw->config().a)
                throw std::invalid_argument("state file: interval length does not match model");
            phi.coeffs.assign(model.dimension(), 0.0);
            std::vector<bool> seen(model.dimension(), false);
            for (const auto& mode : j.at("modes")) {
                const int k = mode.at("k").get<int>();
                const int cutoff = static_cast<int>(pw->config().cutoff);
                if (k < -cutoff || k > cutoff)
                    throw std::invalid_argument("state file: mode index beyond cutoff");
                const std::size_t slot = static_cast<std::size_t>(k + cutoff);
                if (seen[slot])
                    throw std::invalid_argument("state file: duplicate mode index");
                seen[slot] = true;
                phi.coeffs[slot] =
                    Complex(mode.value("re", 0.0), mode.value("im", 0.0));
            }
            return phi;
        }
        const auto& arr = j.at("coeffs");
        if (!arr.is_array() || arr.size() != model.dimension())
            throw std::invalid_argument("state file: coeffs length must equal model dimension");
        phi.coeffs.reserve(arr.size());
        for (const auto& c : arr)
            phi.coeffs.emplace_back(c.value("re", 0.0), c.value("im", 0.0));
        return phi;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("state file: ") + e.what());
    }
}

StateVector load_state_file(const std::string& path, const Model& model) {
    return load_state_text(slurp(path), model);
}

void write_points_csv(std::ostream& out, const SamplingSet& set) {
    out << "index,x,kernel_norm,weight\n";
    for (std::size_t i = 0; i < set.size(); ++i)
        out << i << ',' << format_g17(set.points[i]) << ','
            << format_g17(set.kernel_norms[i]) << ',' << format_g17(set.weights[i])
            << '\n';
}

SamplingSet read_points_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "index,x,kernel_norm,weight")
        throw std::invalid_argument("points csv: bad header");
    SamplingSet set;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t idx;
        double x, kn, w;
        if (std::sscanf(line.c_str(), "%zu,%lf,%lf,%lf", &idx, &x, &kn, &w) != 4)
            throw std::invalid_argument("points csv: bad row '" + line + "'");
        if (idx != set.points.size())
            throw std::invalid_argument("points csv: indices must be consecutive");
        set.points.push_back(x);
        set.kernel_norms.push_back(kn);
        set.weights.push_back(w);
    }
    validate(set);
    return set;
}

std::vector<Complex> parse_grid(const std::string& text) {
    double lo = 0.0, hi = 0.0, imag = 0.0;
    long count = 0;
    char trailing = 0;
    int fields = std::sscanf(text.c_str(), "%lf:%lf:%ld,%lf%c", &lo, &hi, &count, &imag,
                             &trailing);
    if (fields != 4) {
        imag = 0.0;
        fields = std::sscanf(text.c_str(), "%lf:%lf:%ld%c", &lo, &hi, &count, &trailing);
        if (fields != 3)
            throw std::invalid_argument("grid: expected lo:hi:count or lo:hi:count,imag");
    }
    if (count < 1 || !std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(imag))
        throw std::invalid_argument("grid: bad parameters");
    std::vector<Complex> grid;
    grid.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
        grid.emplace_back(lo, imag);
        return grid;
    }
    for (long i = 0; i < count; ++i)
        grid.emplace_back(lo + (hi - lo) * static_cast<double>(i) / (count - 1), imag);
    return grid;
}

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace rksamp
