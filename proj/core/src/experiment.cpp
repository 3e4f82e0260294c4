#include "resdiv/experiment.hpp"

#include "resdiv/arith.hpp"
#include "resdiv/characters.hpp"
#include "resdiv/congruences.hpp"
#include "resdiv/moments.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace resdiv {

namespace {

const std::vector<std::string> kIntParams = {"M", "N", "R", "X", "Y", "Z",
                                             "a", "d", "k", "nu", "q"};
const std::vector<std::string> kRealParams = {"delta", "eps"};
const std::vector<std::string> kParamColumns = {"M", "N", "R",     "X",   "Y", "Z",  "a",
                                                "d", "delta", "eps", "k", "nu", "q"};

bool is_int_param(const std::string& p) {
    return std::find(kIntParams.begin(), kIntParams.end(), p) != kIntParams.end();
}
bool is_real_param(const std::string& p) {
    return std::find(kRealParams.begin(), kRealParams.end(), p) != kRealParams.end();
}

struct CommandSpec {
    std::vector<std::string> required;
    std::vector<std::string> optional;
};

const std::map<Command, CommandSpec>& command_specs() {
    static const std::map<Command, CommandSpec> specs = {
        {Command::Tau, {{"M", "N", "k"}, {}}},
        {Command::Count, {{"q", "a"}, {"M", "N", "X", "Y", "Z"}}},
        {Command::CharSum, {{"q", "Z"}, {"nu", "eps"}}},
        {Command::Moments, {{"q", "Z"}, {"eps"}}},
        {Command::Delta, {{"q", "d", "M", "N"}, {"eps", "delta"}}},
        {Command::Gamma, {{"q", "M", "N", "R"}, {"nu", "eps", "delta"}}},
        {Command::Variance, {{"q", "X", "Y"}, {"Z", "nu", "eps"}}},
        {Command::Bounds, {{"q"}, {"M", "N", "R", "X", "Y", "Z", "nu", "delta", "eps"}}},
        {Command::Conjecture, {{"q", "a", "M", "N", "R"}, {}}},
    };
    return specs;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

bool parse_u64(const std::string& s, std::uint64_t& out) {
    const std::string t = trim(s);
    if (t.empty()) return false;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    auto [p, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && p == last;
}

bool parse_double(const std::string& s, double& out) {
    const std::string t = trim(s);
    if (t.empty()) return false;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    auto [p, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && p == last;
}

/// "2/3", "0.5" or "2" as an exact rational.
bool parse_exponent(const std::string& s, Rational& out) {
    const std::string t = trim(s);
    if (t.empty()) return false;
    const auto slash = t.find('/');
    if (slash != std::string::npos) {
        std::uint64_t num = 0, den = 0;
        if (!parse_u64(t.substr(0, slash), num) || !parse_u64(t.substr(slash + 1), den) ||
            den == 0)
            return false;
        out = Rational(BigInt(num), BigInt(den));
        return true;
    }
    const auto dot = t.find('.');
    if (dot != std::string::npos) {
        std::uint64_t ip = 0, fp = 0;
        const std::string frac = t.substr(dot + 1);
        if (!parse_u64(t.substr(0, dot).empty() ? "0" : t.substr(0, dot), ip)) return false;
        if (frac.empty() || !parse_u64(frac, fp)) return false;
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        out = Rational(BigInt(ip) * scale + fp, scale);
        return true;
    }
    std::uint64_t v = 0;
    if (!parse_u64(t, v)) return false;
    out = Rational(BigInt(v));
    return true;
}

std::string render_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, p);
}

std::optional<ValueSpec> parse_value_spec(const std::string& param, const std::string& raw,
                                          std::vector<std::string>& errors) {
    ValueSpec spec;
    const std::string value = trim(raw);
    if (value.empty()) {
        errors.push_back("empty value for parameter '" + param + "'");
        return std::nullopt;
    }
    if (value.rfind("q^{", 0) == 0 && value.back() == '}') {
        if (param == "q") {
            errors.push_back("parameter 'q' cannot be defined by a power rule");
            return std::nullopt;
        }
        if (!is_int_param(param)) {
            errors.push_back("power rules apply only to integer parameters ('" + param + "')");
            return std::nullopt;
        }
        Rational expo;
        if (!parse_exponent(value.substr(3, value.size() - 4), expo)) {
            errors.push_back("malformed power rule for '" + param + "': " + value);
            return std::nullopt;
        }
        spec.kind = ValueSpec::Kind::Power;
        spec.power_exponent = expo;
        return spec;
    }
    if (value.find("..") != std::string::npos) {
        const auto parts = split(value, '.');
        // start..end..step splits on '.' as {start, "", end, "", step}
        std::vector<std::string> pieces;
        for (const auto& p : parts)
            if (!p.empty()) pieces.push_back(p);
        if (pieces.size() != 3 || parts.size() != 5) {
            errors.push_back("malformed range for '" + param + "': " + value +
                             " (expected start..end..step)");
            return std::nullopt;
        }
        spec.kind = ValueSpec::Kind::Range;
        spec.range_start = pieces[0];
        spec.range_end = pieces[1];
        spec.range_step = pieces[2];
        std::uint64_t s0 = 0, s1 = 0, s2 = 0;
        if (!is_int_param(param)) {
            errors.push_back("ranges are supported only for integer parameters ('" + param +
                             "')");
            return std::nullopt;
        }
        if (!parse_u64(spec.range_start, s0) || !parse_u64(spec.range_end, s1) ||
            !parse_u64(spec.range_step, s2)) {
            errors.push_back("malformed range for '" + param + "': " + value);
            return std::nullopt;
        }
        if (s2 == 0) errors.push_back("range step must be positive for '" + param + "'");
        if (s0 > s1) errors.push_back("range start exceeds end for '" + param + "'");
        if (s2 == 0 || s0 > s1) return std::nullopt;
        return spec;
    }
    spec.kind = ValueSpec::Kind::List;
    for (const auto& item : split(value, ',')) {
        const std::string t = trim(item);
        if (t.empty()) {
            errors.push_back("empty list item for parameter '" + param + "'");
            return std::nullopt;
        }
        if (is_int_param(param)) {
            std::uint64_t v = 0;
            if (!parse_u64(t, v)) {
                errors.push_back("parameter '" + param + "' expects integers, got '" + t + "'");
                return std::nullopt;
            }
        } else {
            double v = 0;
            if (!parse_double(t, v)) {
                errors.push_back("parameter '" + param + "' expects reals, got '" + t + "'");
                return std::nullopt;
            }
        }
        spec.list_items.push_back(t);
    }
    return spec;
}

}  // namespace

std::string command_name(Command c) {
    switch (c) {
        case Command::Tau: return "tau";
        case Command::Count: return "count";
        case Command::CharSum: return "charsum";
        case Command::Moments: return "moments";
        case Command::Delta: return "delta";
        case Command::Gamma: return "gamma";
        case Command::Variance: return "variance";
        case Command::Bounds: return "bounds";
        case Command::Conjecture: return "conjecture";
    }
    return "?";
}

std::optional<Command> command_from_name(const std::string& name) {
    static const std::map<std::string, Command> names = {
        {"tau", Command::Tau},         {"count", Command::Count},
        {"charsum", Command::CharSum}, {"moments", Command::Moments},
        {"delta", Command::Delta},     {"gamma", Command::Gamma},
        {"variance", Command::Variance}, {"bounds", Command::Bounds},
        {"conjecture", Command::Conjecture},
    };
    const auto it = names.find(name);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

const std::vector<std::string>& report_param_columns() { return kParamColumns; }

ParseResult build_config(const std::map<std::string, std::string>& kv) {
    ParseResult result;
    auto& errors = result.errors;
    ExperimentConfig cfg;

    const auto cmd_it = kv.find("command");
    if (cmd_it == kv.end()) {
        errors.push_back("missing required key 'command'");
    } else if (cmd_it->second == "scan") {
        errors.push_back("'scan' is the runner, not a grid command; pick one of tau, count, "
                         "charsum, moments, delta, gamma, variance, bounds, conjecture");
    } else if (auto c = command_from_name(cmd_it->second)) {
        cfg.command = *c;
    } else {
        errors.push_back("unknown command '" + cmd_it->second + "'");
    }

    for (const auto& [key, value] : kv) {
        if (key == "command") continue;
        if (key == "parallelism") {
            std::uint64_t v = 0;
            if (!parse_u64(value, v) || v == 0)
                errors.push_back("parallelism must be a positive integer");
            else
                cfg.parallelism = static_cast<unsigned>(v);
        } else if (key == "format") {
            if (value != "csv" && value != "json")
                errors.push_back("format must be 'csv' or 'json'");
            else
                cfg.format = value;
        } else if (key == "out") {
            cfg.output_path = value;
        } else if (key == "seed") {
            std::uint64_t v = 0;
            if (!parse_u64(value, v))
                errors.push_back("seed must be an unsigned integer");
            else
                cfg.seed = v;
        } else if (key == "timing") {
            if (value == "on" || value == "true" || value == "1")
                cfg.timing = true;
            else if (value == "off" || value == "false" || value == "0")
                cfg.timing = false;
            else
                errors.push_back("timing must be on or off");
        } else if (is_int_param(key) || is_real_param(key)) {
            if (auto spec = parse_value_spec(key, value, errors)) cfg.grid[key] = *spec;
        } else {
            errors.push_back("unknown key '" + key + "'");
        }
    }

    if (cmd_it != kv.end() && command_from_name(cmd_it->second)) {
        const auto& spec = command_specs().at(cfg.command);
        for (const auto& req : spec.required)
            if (!cfg.grid.count(req))
                errors.push_back("command '" + command_name(cfg.command) +
                                 "' requires parameter '" + req + "'");
        for (const auto& [param, vs] : cfg.grid) {
            const bool known =
                std::find(spec.required.begin(), spec.required.end(), param) !=
                    spec.required.end() ||
                std::find(spec.optional.begin(), spec.optional.end(), param) !=
                    spec.optional.end();
            if (!known)
                errors.push_back("parameter '" + param + "' is not used by command '" +
                                 command_name(cfg.command) + "'");
            if (vs.kind == ValueSpec::Kind::Power && !cfg.grid.count("q"))
                errors.push_back("power rule for '" + param + "' references q, but q is not in "
                                 "the grid");
        }
        if (cfg.command == Command::Count) {
            const bool has_mn = cfg.grid.count("M") && cfg.grid.count("N");
            const bool has_xy = cfg.grid.count("X") && cfg.grid.count("Y");
            if (has_mn == has_xy)
                errors.push_back("command 'count' needs exactly one of (M,N) or (X,Y[,Z])");
        }
        if (cfg.command == Command::Bounds) {
            static const char* range_params[] = {"M", "N", "R", "X", "Y", "Z"};
            bool any = false;
            for (const char* p : range_params) any = any || cfg.grid.count(p);
            if (!any)
                errors.push_back("command 'bounds' needs at least one range parameter "
                                 "(M, N, R, X, Y, Z)");
        }
    }

    if (errors.empty()) result.config = cfg;
    return result;
}

std::map<std::string, std::string> parse_key_values(const std::string& text,
                                                    std::vector<std::string>& errors) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            errors.push_back("line " + std::to_string(lineno) + ": expected key = value");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            errors.push_back("line " + std::to_string(lineno) + ": empty key");
            continue;
        }
        if (kv.count(key)) {
            errors.push_back("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
            continue;
        }
        kv[key] = value;
    }
    return kv;
}

ParseResult parse_config(const std::string& text) {
    std::vector<std::string> errors;
    const auto kv = parse_key_values(text, errors);
    ParseResult r = build_config(kv);
    if (!errors.empty()) {
        errors.insert(errors.end(), r.errors.begin(), r.errors.end());
        return {std::nullopt, errors};
    }
    return r;
}

std::uint64_t floor_power(std::uint64_t q, const Rational& exponent) {
    if (q == 0) throw std::invalid_argument("floor_power: q must be positive");
    if (exponent < 0) throw std::invalid_argument("floor_power: exponent must be >= 0");
    const BigInt num = boost::multiprecision::numerator(exponent);
    const BigInt den = boost::multiprecision::denominator(exponent);
    const auto inum = num.convert_to<unsigned long long>();
    const auto iden = den.convert_to<unsigned long long>();
    BigInt target = 1;  // q^num
    for (unsigned long long i = 0; i < inum; ++i) target *= q;
    // largest m with m^den <= q^num, seeded from the double estimate
    const double guess = std::pow(static_cast<double>(q),
                                  static_cast<double>(inum) / static_cast<double>(iden));
    BigInt m = BigInt(static_cast<std::uint64_t>(std::max(0.0, guess)));
    auto powi = [&](const BigInt& b) {
        BigInt r = 1;
        for (unsigned long long i = 0; i < iden; ++i) r *= b;
        return r;
    };
    while (powi(m + 1) <= target) ++m;
    while (m > 0 && powi(m) > target) --m;
    return m.convert_to<std::uint64_t>();
}

std::vector<GridPoint> resolve_grid(const ExperimentConfig& config) {
    // dimensions in name order, last fastest; power rules resolve per point
    std::vector<std::string> dim_names;
    std::vector<std::vector<std::string>> dim_values;
    std::vector<std::string> power_params;
    for (const auto& [param, spec] : config.grid) {  // std::map is name-ordered
        if (spec.kind == ValueSpec::Kind::Power) {
            power_params.push_back(param);
            continue;
        }
        std::vector<std::string> values;
        if (spec.kind == ValueSpec::Kind::List) {
            values = spec.list_items;
        } else {
            std::uint64_t s0 = 0, s1 = 0, s2 = 0;
            parse_u64(spec.range_start, s0);
            parse_u64(spec.range_end, s1);
            parse_u64(spec.range_step, s2);
            for (std::uint64_t v = s0; v <= s1; v += s2) values.push_back(std::to_string(v));
        }
        dim_names.push_back(param);
        dim_values.push_back(std::move(values));
    }

    std::vector<GridPoint> points;
    std::vector<std::size_t> idx(dim_names.size(), 0);
    for (;;) {
        GridPoint pt;
        for (std::size_t i = 0; i < dim_names.size(); ++i) {
            const std::string& name = dim_names[i];
            const std::string& tok = dim_values[i][idx[i]];
            if (is_int_param(name)) {
                std::uint64_t v = 0;
                parse_u64(tok, v);
                pt.ints[name] = v;
            } else {
                double v = 0;
                parse_double(tok, v);
                pt.reals[name] = v;
            }
        }
        for (const auto& param : power_params)
            pt.ints[param] = floor_power(pt.ints.at("q"),
                                         config.grid.at(param).power_exponent);
        points.push_back(std::move(pt));
        // odometer increment, last dimension fastest
        std::size_t i = dim_names.size();
        for (;;) {
            if (i == 0) return points;
            --i;
            if (++idx[i] < dim_values[i].size()) break;
            idx[i] = 0;
        }
    }
}

namespace {

std::uint64_t need_int(const GridPoint& pt, const char* name) {
    const auto it = pt.ints.find(name);
    if (it == pt.ints.end())
        throw std::invalid_argument(std::string("missing parameter '") + name + "'");
    return it->second;
}

std::optional<std::uint64_t> opt_int(const GridPoint& pt, const char* name) {
    const auto it = pt.ints.find(name);
    if (it == pt.ints.end()) return std::nullopt;
    return it->second;
}

double real_or(const GridPoint& pt, const char* name, double fallback) {
    const auto it = pt.reals.find(name);
    return it == pt.reals.end() ? fallback : it->second;
}

int nu_or(const GridPoint& pt, int fallback) {
    const auto it = pt.ints.find("nu");
    return it == pt.ints.end() ? fallback : static_cast<int>(it->second);
}

void fill_params(ReportRow& row, const GridPoint& pt) {
    for (const auto& [k, v] : pt.ints) row.params[k] = std::to_string(v);
    for (const auto& [k, v] : pt.reals) row.params[k] = render_double(v);
}

void apply_report(ReportRow& row, const DeviationReport& rep) {
    row.statistic = rep.statistic;
    row.bounds = rep.bounds;
    row.minimal_slack = rep.minimal_slack;
    if (rep.params.nu) row.params["nu"] = std::to_string(*rep.params.nu);
    if (rep.params.eps) row.params["eps"] = render_double(*rep.params.eps);
    if (rep.params.delta) row.params["delta"] = render_double(*rep.params.delta);
}

ReportRow run_point(const ExperimentConfig& cfg, const GridPoint& pt) {
    ReportRow row;
    fill_params(row, pt);
    const double eps = real_or(pt, "eps", 0.5);
    const double delta = real_or(pt, "delta", 0.5);
    switch (cfg.command) {
        case Command::Tau: {
            row.statistic =
                Rational(BigInt(restricted_tau(need_int(pt, "M"), need_int(pt, "N"),
                                               need_int(pt, "k"))));
            break;
        }
        case Command::Count: {
            const std::uint64_t q = need_int(pt, "q");
            const std::uint64_t a = need_int(pt, "a");
            std::uint64_t value = 0;
            if (pt.ints.count("M")) {
                value = count_T_all(q, need_int(pt, "M"), need_int(pt, "N")).at(a);
            } else if (pt.ints.count("Z")) {
                value = count_R_all(q, need_int(pt, "X"), need_int(pt, "Y"),
                                    need_int(pt, "Z"))
                            .at(a);
            } else {
                value = count_T_star_all(q, need_int(pt, "X"), need_int(pt, "Y")).at(a);
            }
            row.statistic = Rational(BigInt(value));
            break;
        }
        case Command::CharSum: {
            const std::uint64_t q = need_int(pt, "q");
            const std::uint64_t Z = need_int(pt, "Z");
            const int nu = nu_or(pt, 2);
            const CharacterTable table(q);
            const double v = max_nonprincipal_abs(table, Z);
            row.statistic_value = v;
            row.bounds["pv_burgess"] = pv_burgess_bound(q, Z, nu, eps);
            row.params["nu"] = std::to_string(nu);
            row.params["eps"] = render_double(eps);
            if (v > 0) row.minimal_slack = minimal_slack(v, pv_burgess_bound(q, Z, nu, 0.0), q);
            break;
        }
        case Command::Moments: {
            const std::uint64_t q = need_int(pt, "q");
            const std::uint64_t Z = need_int(pt, "Z");
            const CharacterTable table(q);
            const double v = fourth_moment(table, Z);
            row.statistic_value = v;
            row.bounds["lemma_4th_moment"] = fourth_moment_bound(q, Z, eps);
            row.params["eps"] = render_double(eps);
            if (v > 0) row.minimal_slack = minimal_slack(v, fourth_moment_bound(q, Z, 0.0), q);
            break;
        }
        case Command::Delta: {
            apply_report(row, delta_sum(need_int(pt, "q"), need_int(pt, "d"),
                                        need_int(pt, "M"), need_int(pt, "N"), eps, delta));
            break;
        }
        case Command::Gamma: {
            apply_report(row, gamma_sum(need_int(pt, "q"), need_int(pt, "M"),
                                        need_int(pt, "N"), need_int(pt, "R"), nu_or(pt, 2),
                                        eps, delta));
            break;
        }
        case Command::Variance: {
            const std::uint64_t q = need_int(pt, "q");
            if (pt.ints.count("Z")) {
                apply_report(row, r_variance(q, need_int(pt, "X"), need_int(pt, "Y"),
                                             need_int(pt, "Z"), 1, 5, eps));
            } else {
                apply_report(row, t_star_variance(q, need_int(pt, "X"), need_int(pt, "Y"),
                                                  eps));
            }
            break;
        }
        case Command::Bounds: {
            const std::uint64_t q = need_int(pt, "q");
            const int nu = nu_or(pt, 2);
            const auto M = opt_int(pt, "M");
            const auto N = opt_int(pt, "N");
            const auto R = opt_int(pt, "R");
            const auto X = opt_int(pt, "X");
            const auto Y = opt_int(pt, "Y");
            const auto Z = opt_int(pt, "Z");
            if (M && N) row.bounds["thm_delta"] = thm_delta_bound(q, *M, *N, eps);
            if (N) row.bounds["truelsen_delta"] = truelsen_delta_bound(q, *N, delta, eps);
            if (M && N && R)
                row.bounds["thm_gamma"] = thm_gamma_bound(q, *M, *N, *R, nu, eps);
            if (N && R)
                row.bounds["truelsen_gamma"] = truelsen_gamma_bound(q, *N, *R, delta, eps);
            if (Z) {
                row.bounds["pv_burgess"] = pv_burgess_bound(q, *Z, nu, eps);
                row.bounds["lemma_4th_moment"] = fourth_moment_bound(q, *Z, eps);
            }
            if (X && Y) row.bounds["lemma_t_aver"] = lemma_t_aver_bound(q, *X, *Y, eps);
            if (X && Y && Z)
                row.bounds["lemma_r_aver"] = lemma_r_aver_bound(q, *X, *Y, *Z, nu, eps);
            row.params["nu"] = std::to_string(nu);
            row.params["eps"] = render_double(eps);
            row.params["delta"] = render_double(delta);
            break;
        }
        case Command::Conjecture: {
            row.statistic = conjecture_ratio(need_int(pt, "q"), need_int(pt, "a"),
                                             need_int(pt, "M"), need_int(pt, "N"),
                                             need_int(pt, "R"));
            break;
        }
    }
    return row;
}

}  // namespace

std::vector<ReportRow> run_scan(const ExperimentConfig& config) {
    const std::vector<GridPoint> points = resolve_grid(config);
    std::vector<ReportRow> rows(points.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= points.size()) return;
            const auto start = std::chrono::steady_clock::now();
            try {
                rows[i] = run_point(config, points[i]);
            } catch (const std::exception& ex) {
                rows[i] = ReportRow{};
                fill_params(rows[i], points[i]);
                rows[i].error = ex.what();
            }
            if (config.timing) {
                const auto stop = std::chrono::steady_clock::now();
                rows[i].ms = std::chrono::duration<double, std::milli>(stop - start).count();
            }
        }
    };

    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(config.parallelism, points.size()));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return rows;
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

std::vector<std::string> bound_columns(const std::vector<ReportRow>& rows) {
    std::set<std::string> names;
    for (const auto& row : rows)
        for (const auto& [name, value] : row.bounds) names.insert(name);
    return {names.begin(), names.end()};
}

std::vector<std::pair<std::string, std::string>> row_fields(
    const ReportRow& row, const std::vector<std::string>& bounds) {
    std::vector<std::pair<std::string, std::string>> fields;
    for (const auto& p : kParamColumns) {
        const auto it = row.params.find(p);
        fields.emplace_back(p, it == row.params.end() ? "" : it->second);
    }
    if (row.statistic) {
        fields.emplace_back("statistic_num",
                            boost::multiprecision::numerator(*row.statistic).str());
        fields.emplace_back("statistic_den",
                            boost::multiprecision::denominator(*row.statistic).str());
        fields.emplace_back("statistic_dec", rational_to_decimal(*row.statistic));
    } else if (row.statistic_value) {
        fields.emplace_back("statistic_num", "");
        fields.emplace_back("statistic_den", "");
        fields.emplace_back("statistic_dec", render_double(*row.statistic_value));
    } else {
        fields.emplace_back("statistic_num", "");
        fields.emplace_back("statistic_den", "");
        fields.emplace_back("statistic_dec", "");
    }
    for (const auto& b : bounds) {
        const auto it = row.bounds.find(b);
        fields.emplace_back(b, it == row.bounds.end() ? "" : render_double(it->second));
    }
    fields.emplace_back("minimal_slack",
                        row.minimal_slack ? render_double(*row.minimal_slack) : "");
    fields.emplace_back("ms", render_double(row.ms));
    fields.emplace_back("error", row.error);
    return fields;
}

}  // namespace

std::string emit_report(const std::vector<ReportRow>& rows, const std::string& format) {
    if (rows.empty()) throw std::invalid_argument("emit_report: no rows");
    const auto bounds = bound_columns(rows);
    if (format == "csv") {
        std::string out;
        const auto header = row_fields(rows.front(), bounds);
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) out += ",";
            out += csv_escape(header[i].first);
        }
        out += "\n";
        for (const auto& row : rows) {
            const auto fields = row_fields(row, bounds);
            for (std::size_t i = 0; i < fields.size(); ++i) {
                if (i) out += ",";
                out += csv_escape(fields[i].second);
            }
            out += "\n";
        }
        return out;
    }
    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (const auto& [key, value] : row_fields(row, bounds)) obj[key] = value;
            arr.push_back(std::move(obj));
        }
        return arr.dump(2) + "\n";
    }
    throw std::invalid_argument("emit_report: format must be 'csv' or 'json'");
}

}  // namespace resdiv
