#include "sweep.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "error.hpp"
#include "parallel.hpp"
#include "rng.hpp"
#include "text.hpp"
#include "theory.hpp"

namespace qspin {

using text::g17;
using text::parse_bool;
using text::parse_double;
using text::parse_long;
using text::parse_u64;
using text::trim;

namespace {

const std::set<std::string> kObservables = {"bands", "spacing", "npc",
                                            "states", "census", "theory"};

std::vector<double> load_custom_matrix(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw_io("cannot read custom coupling matrix: " + path);
    std::vector<double> vals;
    double v;
    while (f >> v) vals.push_back(v);
    if (!f.eof()) throw_invalid("custom coupling matrix has non-numeric content: " + path);
    return vals;
}

// CSV field quoting, only needed for free-text (error messages).
std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// List values accept commas (the echo form) or whitespace (the file form).
std::vector<std::string> list_tokens(const std::string& value) {
    std::string v = value;
    std::replace(v.begin(), v.end(), ',', ' ');
    std::istringstream is(v);
    std::vector<std::string> out;
    for (std::string tok; is >> tok;) out.push_back(tok);
    return out;
}

std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

SweepConfig parse_config(const std::string& text) {
    SweepConfig cfg;
    std::optional<double> nu;
    bool have_axis = false;

    const auto apply = [&](const std::string& key, const std::string& value, int lineno) {
        if (key.empty() || value.empty())
            throw_invalid("config line " + std::to_string(lineno) + ": empty key or value");

        if (apply_model_key(cfg.base, nu, key, value)) {
            return;
        } else if (key == "custom_matrix") {
            cfg.custom_matrix_path = value;
        } else if (key == "axis") {
            const auto a = axis_from_string(value);
            if (!a) throw_invalid("key 'axis': unknown axis '" + value + "'");
            cfg.axis = *a;
            have_axis = true;
        } else if (key == "values") {
            cfg.values.clear();
            for (const auto& tok : list_tokens(value))
                cfg.values.push_back(parse_double(key, tok));
        } else if (key == "ensemble") {
            cfg.ensemble = static_cast<int>(parse_long(key, value));
        } else if (key == "observables") {
            cfg.observables.clear();
            for (const auto& tok : list_tokens(value)) {
                if (!kObservables.count(tok))
                    throw_invalid("key 'observables': unknown observable '" + tok + "'");
                cfg.observables.push_back(tok);
            }
        } else if (key == "rep") {
            if (value == "z")
                cfg.rep = Representation::Z;
            else if (value == "mf")
                cfg.rep = Representation::MeanField;
            else
                throw_invalid("key 'rep': expected 'z' or 'mf', got '" + value + "'");
        } else if (key == "bins") {
            cfg.bins = static_cast<int>(parse_long(key, value));
        } else if (key == "s_max") {
            cfg.s_max = parse_double(key, value);
        } else if (key == "threshold") {
            cfg.threshold = parse_double(key, value);
        } else if (key == "master_seed") {
            cfg.master_seed = parse_u64(key, value);
        } else if (key == "output") {
            cfg.output = value;
        } else if (key == "format") {
            if (value == "csv")
                cfg.format = OutputFormat::Csv;
            else if (value == "jsonl")
                cfg.format = OutputFormat::Jsonl;
            else
                throw_invalid("key 'format': expected 'csv' or 'jsonl', got '" + value + "'");
        } else if (key == "workers") {
            cfg.workers = static_cast<int>(parse_long(key, value));
        } else if (key == "overwrite") {
            cfg.overwrite = parse_bool(key, value);
        } else if (key == "timing") {
            cfg.timing = parse_bool(key, value);
        } else {
            throw_invalid("unknown config key '" + key + "'");
        }
    };

    // Two accepted shapes: one `key = value` assignment per line (value may
    // contain spaces), or several whitespace-separated key=value tokens on a
    // single line, which is what config_echo produces.
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        std::vector<std::string> assignments;
        if (std::count(line.begin(), line.end(), '=') <= 1) {
            assignments.push_back(line);
        } else {
            std::istringstream tokens(line);
            std::string tok;
            while (tokens >> tok) assignments.push_back(tok);
        }
        for (const auto& assignment : assignments) {
            const std::size_t eq = assignment.find('=');
            if (eq == std::string::npos)
                throw_invalid("config line " + std::to_string(lineno) +
                              ": expected 'key = value', got '" + assignment + "'");
            apply(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)), lineno);
        }
    }

    cfg.base.nu = nu.value_or(cfg.base.omega0);
    if (!cfg.custom_matrix_path.empty())
        cfg.base.coupling.custom = load_custom_matrix(cfg.custom_matrix_path);

    // Validate the base parameter record eagerly (per-point rebuilds repeat
    // this with the point's own seeds).
    make_params(cfg.base);

    if (cfg.ensemble < 1) throw_invalid("ensemble must be at least 1");
    if (cfg.ensemble > 1 && !cfg.base.coupling.random &&
        cfg.base.profile != FieldProfile::Homogeneous)
        throw_invalid("ensemble > 1 requires random couplings or the homogeneous profile");
    if (cfg.bins < 1) throw_invalid("bins must be at least 1");
    if (!(cfg.s_max > 0.0)) throw_invalid("s_max must be positive");
    if (cfg.threshold < 0.0) throw_invalid("threshold must be non-negative");
    if (cfg.workers < 0) throw_invalid("workers must be non-negative");

    if (have_axis != !cfg.values.empty())
        throw_invalid("axis and values must be given together");
    if (have_axis) {
        bool inc = true, dec = true;
        for (std::size_t i = 1; i < cfg.values.size(); ++i) {
            inc = inc && cfg.values[i] > cfg.values[i - 1];
            dec = dec && cfg.values[i] < cfg.values[i - 1];
        }
        if (!inc && !dec) throw_invalid("values must be strictly monotone");
        if (*cfg.axis == Axis::L && cfg.base.coupling.custom)
            throw_invalid("axis L conflicts with a custom coupling matrix");
        if (*cfg.axis == Axis::Delta && cfg.base.profile != FieldProfile::Homogeneous)
            throw_invalid("axis delta requires the homogeneous profile");
    }
    return cfg;
}

std::string config_echo(const SweepConfig& cfg) {
    std::ostringstream o;
    const ModelParams& b = cfg.base;
    o << "L=" << b.L << " omega=" << g17(b.omega) << " omega0=" << g17(b.omega0)
      << " nu=" << g17(b.nu) << " profile=" << to_string(b.profile)
      << " a=" << g17(b.gradient_a) << " delta=" << g17(b.spread)
      << " b=" << g17(b.gradient_b) << " field_seed=" << b.field_seed
      << " coupling=" << to_string(b.coupling.kind) << " J=" << g17(b.coupling.j)
      << " random=" << (b.coupling.random ? "true" : "false") << " seed=" << b.coupling.seed
      << " allow_large=" << (b.allow_large ? "true" : "false");
    if (!cfg.custom_matrix_path.empty()) o << " custom_matrix=" << cfg.custom_matrix_path;
    if (cfg.axis) {
        o << " axis=" << to_string(*cfg.axis) << " values=";
        for (std::size_t i = 0; i < cfg.values.size(); ++i)
            o << (i ? "," : "") << g17(cfg.values[i]);
    }
    o << " ensemble=" << cfg.ensemble;
    if (!cfg.observables.empty()) {
        o << " observables=";
        for (std::size_t i = 0; i < cfg.observables.size(); ++i)
            o << (i ? "," : "") << cfg.observables[i];
    }
    o << " rep=" << (cfg.rep == Representation::Z ? "z" : "mf") << " bins=" << cfg.bins
      << " s_max=" << g17(cfg.s_max) << " threshold=" << g17(cfg.threshold)
      << " master_seed=" << cfg.master_seed << " output=" << cfg.output
      << " format=" << (cfg.format == OutputFormat::Csv ? "csv" : "jsonl")
      << " workers=" << cfg.workers << " overwrite=" << (cfg.overwrite ? "true" : "false")
      << " timing=" << (cfg.timing ? "true" : "false");
    return o.str();
}

namespace {

struct PointPlan {
    bool bands = false, spacing = false, npc = false, states = false, census = false,
         theory = false;
    bool need_solve() const { return bands || spacing || npc || states; }
    bool need_vectors() const { return npc || states; }
};

struct PointOutput {
    std::vector<ResultRow> rows;
    std::vector<double> spacings;  // normalized, for grid-level pooling
    bool have_npc = false;
    double mean_npc = 0.0, mean_sigma = 0.0, band_pop = 0.0;
};

void fill_echo(ResultRow& r, const ModelParams& p) {
    r.L = p.L;
    r.omega = p.omega;
    r.omega0 = p.omega0;
    r.nu = p.nu;
    r.profile = to_string(p.profile);
    r.a = p.gradient_a;
    r.delta = p.spread;
    r.b = p.gradient_b;
    r.coupling = to_string(p.coupling.kind);
    r.J = p.coupling.j;
    r.random = p.coupling.random;
    r.bond_seed = p.coupling.seed;
    r.field_seed = p.field_seed;
}

PointOutput eval_point(const SweepConfig& cfg, const PointPlan& plan, long g, long e) {
    PointOutput out;
    ModelParams seeded = cfg.base;
    const std::uint64_t point = SplitMix64::derive(SplitMix64::derive(cfg.master_seed, g), e);
    seeded.coupling.seed = SplitMix64::derive(point, 0);
    seeded.field_seed = SplitMix64::derive(point, 1);

    ResultRow proto;
    proto.axis = to_string(*cfg.axis);
    proto.axis_value = cfg.values[g];
    proto.grid_index = g;
    proto.ensemble_index = e;
    fill_echo(proto, seeded);

    try {
        const ModelParams p = with_axis(seeded, *cfg.axis, cfg.values[g]);
        fill_echo(proto, p);

        if (plan.need_solve()) {
            const ComplexMatrix h = cfg.rep == Representation::Z
                                        ? build_z_hamiltonian(p)
                                        : build_mean_field_hamiltonian(p);
            const Spectrum spec = eigh(h, {.vectors = plan.need_vectors()});
            const auto bands = identify_bands(spec, p);
            const Band central = central_band(bands, spec.eigenvalues);

            if (plan.bands) {
                for (std::size_t bi = 0; bi < bands.size(); ++bi) {
                    ResultRow r = proto;
                    r.observable = "band";
                    r.index = static_cast<long>(bi);
                    r.value = bands[bi].width();
                    r.aux1 = bands[bi].e_min;
                    r.aux2 = bands[bi].e_max;
                    out.rows.push_back(std::move(r));
                }
            }
            if (plan.spacing) out.spacings = normalized_spacings(spec.eigenvalues, central);
            if (plan.npc || plan.states) {
                const auto metrics = band_metrics(spec, central, cfg.rep);
                if (plan.npc) {
                    ResultRow r = proto;
                    r.observable = "npc";
                    r.value = metrics.mean_npc;
                    r.aux1 = metrics.mean_sigma;
                    r.aux2 = central.population();
                    out.rows.push_back(std::move(r));
                    out.have_npc = true;
                    out.mean_npc = metrics.mean_npc;
                    out.mean_sigma = metrics.mean_sigma;
                    out.band_pop = central.population();
                }
                if (plan.states) {
                    const auto profile = band_metrics(spec, {0, spec.dim() - 1,
                                                             spec.eigenvalues.front(),
                                                             spec.eigenvalues.back()},
                                                      cfg.rep);
                    for (std::size_t si = 0; si < profile.states.size(); ++si) {
                        ResultRow r = proto;
                        r.observable = "state";
                        r.index = static_cast<long>(si);
                        r.value = profile.states[si].energy;
                        r.aux1 = profile.states[si].npc;
                        r.aux2 = profile.states[si].sigma;
                        out.rows.push_back(std::move(r));
                    }
                }
            }
        }
        if (plan.census) {
            const auto census = coupling_census(p, cfg.threshold);
            ResultRow r = proto;
            r.observable = "census";
            r.value = census.m_f_mean;
            r.aux1 = census.delta_e_f;
            r.aux2 = census.d_f;
            out.rows.push_back(std::move(r));
        }
        if (out.rows.empty() && !plan.spacing && !plan.theory) {
            ResultRow r = proto;
            r.observable = "echo";
            r.value = proto.axis_value;
            out.rows.push_back(std::move(r));
        }
    } catch (const std::exception& ex) {
        ResultRow r = proto;
        r.observable = "error";
        r.error = ex.what();
        out.rows.assign(1, std::move(r));
        out.spacings.clear();
        out.have_npc = false;
    }
    return out;
}

}  // namespace

std::vector<ResultRow> run_sweep(const SweepConfig& cfg) {
    if (!cfg.axis) throw_invalid("run_sweep: no axis configured");
    if (cfg.values.empty()) throw_invalid("run_sweep: empty value grid");

    PointPlan plan;
    for (const auto& o : cfg.observables) {
        if (o == "bands") plan.bands = true;
        if (o == "spacing") plan.spacing = true;
        if (o == "npc") plan.npc = true;
        if (o == "states") plan.states = true;
        if (o == "census") plan.census = true;
        if (o == "theory") plan.theory = true;
    }

    const long G = static_cast<long>(cfg.values.size());
    const long E = cfg.ensemble;
    std::vector<PointOutput> points(static_cast<std::size_t>(G * E));
    std::vector<double> wall(static_cast<std::size_t>(G * E), 0.0);
    parallel_for(points.size(), cfg.workers, [&](std::size_t i) {
        const auto t0 = std::chrono::steady_clock::now();
        points[i] = eval_point(cfg, plan, static_cast<long>(i) / E, static_cast<long>(i) % E);
        wall[i] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            t0)
                      .count();
    });

    std::vector<ResultRow> rows;
    for (long g = 0; g < G; ++g) {
        for (long e = 0; e < E; ++e) {
            auto& p = points[static_cast<std::size_t>(g * E + e)];
            if (cfg.timing)
                for (auto& r : p.rows) r.wall_ms = wall[static_cast<std::size_t>(g * E + e)];
            rows.insert(rows.end(), std::make_move_iterator(p.rows.begin()),
                        std::make_move_iterator(p.rows.end()));
        }

        // Grid-point-level rows pooled across the ensemble.
        ResultRow pooled;
        pooled.axis = to_string(*cfg.axis);
        pooled.axis_value = cfg.values[g];
        pooled.grid_index = g;
        pooled.ensemble_index = -1;
        try {
            fill_echo(pooled, with_axis(cfg.base, *cfg.axis, cfg.values[g]));
        } catch (const std::exception&) {
            fill_echo(pooled, cfg.base);
        }
        pooled.bond_seed = 0;
        pooled.field_seed = 0;

        if (plan.theory) {
            try {
                const ModelParams p = with_axis(cfg.base, *cfg.axis, cfg.values[g]);
                const BorderEstimates b = borders(p);
                const std::pair<const char*, double> named[] = {
                    {"theory_n_cb", b.n_cb},
                    {"theory_width_j0", b.width_j0},
                    {"theory_width_jdom", b.width_jdom},
                    {"theory_j0_crossover", b.j0_crossover},
                    {"theory_jb_overlap", b.jb_overlap},
                    {"theory_delta_e_f", b.delta_e_f},
                    {"theory_m_f", b.m_f},
                    {"theory_d_f", b.d_f},
                    {"theory_j_cr_deloc", b.j_cr_deloc},
                    {"theory_j_chaos", b.j_chaos},
                    {"theory_j_cr_homogeneous", b.j_cr_homogeneous},
                };
                for (const auto& [name, value] : named) {
                    ResultRow r = pooled;
                    r.observable = name;
                    r.value = value;
                    rows.push_back(std::move(r));
                }
            } catch (const std::exception& ex) {
                ResultRow r = pooled;
                r.observable = "error";
                r.error = ex.what();
                rows.push_back(std::move(r));
            }
        }

        if (plan.spacing) {
            std::vector<double> all;
            for (long e = 0; e < E; ++e) {
                const auto& s = points[static_cast<std::size_t>(g * E + e)].spacings;
                all.insert(all.end(), s.begin(), s.end());
            }
            if (!all.empty()) {
                const auto hist = histogram_from_spacings(all, cfg.bins, cfg.s_max);
                for (int bi = 0; bi < cfg.bins; ++bi) {
                    ResultRow r = pooled;
                    r.observable = "spacing_bin";
                    r.index = bi;
                    r.value = hist.densities[bi];
                    r.aux1 = hist.bin_edges[bi];
                    r.aux2 = hist.bin_edges[bi + 1];
                    rows.push_back(std::move(r));
                }
                const auto dp = distribution_distance(hist, ReferenceKind::Poisson);
                const auto dw = distribution_distance(hist, ReferenceKind::WignerDyson);
                ResultRow r = pooled;
                r.observable = "spacing_distance";
                r.value = dp.l1;
                r.aux1 = dw.l1;
                r.aux2 = dp.small_s_mass;
                rows.push_back(std::move(r));
            }
        }

        if (plan.npc && E > 1) {
            double sum_npc = 0.0, sum_sigma = 0.0, sum_pop = 0.0;
            long n = 0;
            for (long e = 0; e < E; ++e) {
                const auto& p = points[static_cast<std::size_t>(g * E + e)];
                if (!p.have_npc) continue;
                sum_npc += p.mean_npc;
                sum_sigma += p.mean_sigma;
                sum_pop += p.band_pop;
                ++n;
            }
            if (n > 0) {
                ResultRow r = pooled;
                r.observable = "npc_mean";
                r.value = sum_npc / n;
                r.aux1 = sum_sigma / n;
                r.aux2 = sum_pop / n;
                rows.push_back(std::move(r));
            }
        }
    }
    return rows;
}

namespace {

const char* kCsvColumns =
    "axis,axis_value,grid_index,ensemble_index,L,omega,omega0,nu,profile,a,delta,b,"
    "coupling,J,random,bond_seed,field_seed,observable,index,value,aux1,aux2";

void emit_csv(const std::vector<ResultRow>& rows, const SweepConfig& cfg, std::ostream& out) {
    out << "# " << config_echo(cfg) << "\n";
    out << kCsvColumns << (cfg.timing ? ",wall_ms,error\n" : ",error\n");
    for (const auto& r : rows) {
        out << r.axis << ',' << g17(r.axis_value) << ',' << r.grid_index << ','
            << r.ensemble_index << ',' << r.L << ',' << g17(r.omega) << ',' << g17(r.omega0)
            << ',' << g17(r.nu) << ',' << r.profile << ',' << g17(r.a) << ',' << g17(r.delta)
            << ',' << g17(r.b) << ',' << r.coupling << ',' << g17(r.J) << ','
            << (r.random ? "true" : "false") << ',' << r.bond_seed << ',' << r.field_seed
            << ',' << r.observable << ',' << r.index << ',' << g17(r.value) << ','
            << g17(r.aux1) << ',' << g17(r.aux2) << ',';
        if (cfg.timing) out << g17(r.wall_ms) << ',';
        out << csv_quote(r.error) << '\n';
    }
}

void emit_jsonl(const std::vector<ResultRow>& rows, const SweepConfig& cfg, std::ostream& out) {
    for (const auto& r : rows) {
        nlohmann::json j{
            {"axis", r.axis},
            {"axis_value", r.axis_value},
            {"grid_index", r.grid_index},
            {"ensemble_index", r.ensemble_index},
            {"L", r.L},
            {"omega", r.omega},
            {"omega0", r.omega0},
            {"nu", r.nu},
            {"profile", r.profile},
            {"a", r.a},
            {"delta", r.delta},
            {"b", r.b},
            {"coupling", r.coupling},
            {"J", r.J},
            {"random", r.random},
            {"bond_seed", r.bond_seed},
            {"field_seed", r.field_seed},
            {"observable", r.observable},
            {"index", r.index},
            {"value", r.value},
            {"aux1", r.aux1},
            {"aux2", r.aux2},
            {"error", r.error},
        };
        if (cfg.timing) j["wall_ms"] = r.wall_ms;
        out << j.dump() << '\n';
    }
}

}  // namespace

void emit(const std::vector<ResultRow>& rows, const SweepConfig& cfg, std::ostream& out) {
    if (cfg.format == OutputFormat::Csv)
        emit_csv(rows, cfg, out);
    else
        emit_jsonl(rows, cfg, out);
    if (!out) throw_io("emit: stream write failed");
}

std::vector<ResultRow> parse_rows_jsonl(std::istream& in) {
    std::vector<ResultRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        ResultRow r;
        r.axis = j.at("axis").get<std::string>();
        r.axis_value = j.at("axis_value").get<double>();
        r.grid_index = j.at("grid_index").get<long>();
        r.ensemble_index = j.at("ensemble_index").get<long>();
        r.L = j.at("L").get<int>();
        r.omega = j.at("omega").get<double>();
        r.omega0 = j.at("omega0").get<double>();
        r.nu = j.at("nu").get<double>();
        r.profile = j.at("profile").get<std::string>();
        r.a = j.at("a").get<double>();
        r.delta = j.at("delta").get<double>();
        r.b = j.at("b").get<double>();
        r.coupling = j.at("coupling").get<std::string>();
        r.J = j.at("J").get<double>();
        r.random = j.at("random").get<bool>();
        r.bond_seed = j.at("bond_seed").get<std::uint64_t>();
        r.field_seed = j.at("field_seed").get<std::uint64_t>();
        r.observable = j.at("observable").get<std::string>();
        r.index = j.at("index").get<long>();
        r.value = j.at("value").get<double>();
        r.aux1 = j.at("aux1").get<double>();
        r.aux2 = j.at("aux2").get<double>();
        if (j.contains("wall_ms")) r.wall_ms = j.at("wall_ms").get<double>();
        r.error = j.at("error").get<std::string>();
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<ResultRow> parse_rows_csv(std::istream& in) {
    std::vector<ResultRow> rows;
    std::string line;
    bool timing = false;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            timing = line.find("wall_ms") != std::string::npos;
            continue;
        }
        const auto f = csv_split(line);
        const std::size_t expect = timing ? 24 : 23;
        if (f.size() != expect)
            throw_invalid("csv row has " + std::to_string(f.size()) + " fields, expected " +
                          std::to_string(expect));
        ResultRow r;
        std::size_t i = 0;
        r.axis = f[i++];
        r.axis_value = parse_double("axis_value", f[i++]);
        r.grid_index = parse_long("grid_index", f[i++]);
        r.ensemble_index = parse_long("ensemble_index", f[i++]);
        r.L = static_cast<int>(parse_long("L", f[i++]));
        r.omega = parse_double("omega", f[i++]);
        r.omega0 = parse_double("omega0", f[i++]);
        r.nu = parse_double("nu", f[i++]);
        r.profile = f[i++];
        r.a = parse_double("a", f[i++]);
        r.delta = parse_double("delta", f[i++]);
        r.b = parse_double("b", f[i++]);
        r.coupling = f[i++];
        r.J = parse_double("J", f[i++]);
        r.random = parse_bool("random", f[i++]);
        r.bond_seed = parse_u64("bond_seed", f[i++]);
        r.field_seed = parse_u64("field_seed", f[i++]);
        r.observable = f[i++];
        r.index = parse_long("index", f[i++]);
        r.value = parse_double("value", f[i++]);
        r.aux1 = parse_double("aux1", f[i++]);
        r.aux2 = parse_double("aux2", f[i++]);
        if (timing) r.wall_ms = parse_double("wall_ms", f[i++]);
        r.error = f[i++];
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string resolve_output_path(const std::string& path) {
    if (path == "-" || path.empty()) return path;
    const char* dir = std::getenv("QSPIN_OUTPUT_DIR");
    std::filesystem::path p(path);
    if (dir && *dir && p.is_relative()) p = std::filesystem::path(dir) / p;
    return p.string();
}

void write_output(const std::vector<ResultRow>& rows, const SweepConfig& cfg) {
    const std::string resolved = resolve_output_path(cfg.output);
    if (resolved == "-" || resolved.empty()) {
        emit(rows, cfg, std::cout);
        std::cout.flush();
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(resolved);
    if (fs::exists(target) && !cfg.overwrite)
        throw_io("refusing to overwrite existing output: " + resolved +
                 " (set overwrite=true)");
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw_io("cannot open for writing: " + tmp.string());
        emit(rows, cfg, f);
        f.flush();
        if (!f.good()) throw_io("write failed: " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) throw_io("cannot move results into place: " + target.string() + ": " + ec.message());
}

}  // namespace qspin
