#include "ostrowski/io.hpp"

#include "ostrowski/error.hpp"
#include "ostrowski/harness/report.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ostrowski::io {

using nlohmann::json;

namespace {

json parse_text(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError("", std::string("invalid JSON (") + e.what() + ")");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("", "cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double number_at(const json& j, const std::string& where) {
    if (!j.is_number()) {
        throw ParseError(where, "expected a number");
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw ParseError(where, "number must be finite");
    }
    return v;
}

const json& member(const json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(where + "/" + key, "missing");
    }
    return *it;
}

PwmFunction function_from(const json& root) {
    if (!root.is_object()) {
        throw ParseError("", "expected an object");
    }
    const json& ivj = member(root, "interval", "");
    if (!ivj.is_array() || ivj.size() != 2) {
        throw ParseError("/interval", "expected [a, b]");
    }
    const double a = number_at(ivj[0], "/interval/0");
    const double b = number_at(ivj[1], "/interval/1");
    if (!(a < b)) {
        throw ParseError("/interval", "need a < b");
    }
    const Interval iv(a, b);

    const json& segs = member(root, "segments", "");
    if (!segs.is_array() || segs.empty()) {
        throw ParseError("/segments", "expected a non-empty array");
    }
    std::vector<double> rights;
    std::vector<Polynomial> polys;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const std::string where = "/segments/" + std::to_string(i);
        const json& s = segs[i];
        if (!s.is_object()) {
            throw ParseError(where, "expected an object");
        }
        rights.push_back(number_at(member(s, "right", where), where + "/right"));
        const json& cj = member(s, "coeffs", where);
        if (!cj.is_array() || cj.empty()) {
            throw ParseError(where + "/coeffs", "expected a non-empty array");
        }
        if (cj.size() > static_cast<std::size_t>(Polynomial::kMaxDegree) + 1) {
            throw ParseError(where + "/coeffs",
                             "degree above " + std::to_string(Polynomial::kMaxDegree));
        }
        std::vector<double> c;
        for (std::size_t k = 0; k < cj.size(); ++k) {
            c.push_back(number_at(cj[k], where + "/coeffs/" + std::to_string(k)));
        }
        polys.emplace_back(std::move(c), 0.0);
    }
    return PwmFunction(iv, rights, std::move(polys));
}

json interval_json(const Interval& iv) { return json::array({iv.a(), iv.b()}); }

json bound_json(const BoundReport& r) {
    json j{{"x", r.x},           {"rule", r.rule},         {"mean", r.mean},
           {"lhs", r.lhs},       {"q_bound", r.q_bound},   {"coarse", r.coarse},
           {"outer", r.outer},   {"ostrowski_bv", r.ostrowski_bv}};
    if (r.holder) {
        j["holder"] = {{"p", r.holder->p},
                       {"q_holder", r.holder->q_holder},
                       {"coarse_holder", r.holder->coarse_holder},
                       {"enclosure", r.holder->enclosure}};
    }
    return j;
}

json breaks_json(const std::vector<ChainBreak>& v) {
    json out = json::array();
    for (const ChainBreak& b : v) {
        out.push_back({{"pair", b.pair}, {"lhs", b.lhs}, {"rhs", b.rhs}, {"slack", b.slack}});
    }
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

PwmFunction parse_function(std::string_view text) { return function_from(parse_text(text)); }

PwmFunction load_function(const std::string& path) { return parse_function(read_file(path)); }

CdfModel parse_cdf(std::string_view text) {
    const json root = parse_text(text);
    if (!root.is_object()) {
        throw ParseError("", "expected an object");
    }
    const json& kind = member(root, "kind", "");
    if (!kind.is_string() || kind.get<std::string>() != "cdf") {
        throw ParseError("/kind", "expected \"cdf\"");
    }
    return CdfModel(function_from(root));
}

CdfModel load_cdf(const std::string& path) { return parse_cdf(read_file(path)); }

std::string function_to_json(const PwmFunction& f) {
    json segs = json::array();
    for (const PolySegment& s : f.segments()) {
        const Polynomial p = s.poly.recentered(0.0);
        segs.push_back({{"right", s.right},
                        {"coeffs", std::vector<double>(p.coeffs().begin(), p.coeffs().end())}});
    }
    return dump({{"interval", interval_json(f.domain())}, {"segments", segs}});
}

std::string to_json(const BoundReport& r) {
    json j = bound_json(r);
    j["violations"] = breaks_json(chain_breaks(r));
    return dump(j);
}

std::string to_json(const SpecialCaseReport& r) {
    json j{{"case", to_string(r.which)},
           {"report", bound_json(r.report)},
           {"corollary_bound", r.corollary_bound}};
    if (r.corollary_holder) {
        j["corollary_holder"] = *r.corollary_holder;
    }
    return dump(j);
}

std::string to_json(const QuadratureResult& r) {
    return dump({{"estimate", r.estimate},
                 {"error_bound", r.error_bound},
                 {"cells", r.cells.size()},
                 {"cert", to_string(r.cert)},
                 {"converged", r.converged}});
}

std::string to_json(const ProbReport& r) {
    json j{{"x", r.x},
           {"expectation", r.expectation},
           {"lhs", r.lhs},
           {"t_bound", r.t_bound},
           {"middle", r.middle},
           {"outer", r.outer},
           {"violations", breaks_json(r.violations)}};
    if (r.holder) {
        j["holder"] = {{"p", r.holder->p},
                       {"t_holder", r.holder->t_holder},
                       {"middle", r.holder->middle},
                       {"enclosure", r.holder->enclosure}};
    }
    return dump(j);
}

std::string to_json(const harness::KernelDiscrepancy& r) {
    return dump({{"x", r.x},
                 {"p", r.p},
                 {"oracle", r.oracle},
                 {"corrected", r.corrected},
                 {"printed", r.printed},
                 {"tolerance", r.tolerance},
                 {"corrected_matches", r.corrected_matches},
                 {"printed_matches", r.printed_matches},
                 {"degenerate", r.degenerate}});
}

void write_cells_csv(std::ostream& os, const QuadratureResult& r) {
    using harness::format_double;
    os << "left,right,estimate,bound\n";
    for (const QuadratureCell& c : r.cells) {
        os << format_double(c.left) << ',' << format_double(c.right) << ','
           << format_double(c.estimate) << ',' << format_double(c.bound) << '\n';
    }
}

}  // namespace ostrowski::io
