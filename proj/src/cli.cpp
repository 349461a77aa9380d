#include "fsv/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "fsv/catalog.hpp"
#include "fsv/errors.hpp"
#include "fsv/pdesolve.hpp"
#include "fsv/transform.hpp"
#include "fsv/verify.hpp"

namespace fsv::cli {

namespace {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

/// Bad flags, ids or pool names; reported before any computation.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A file or directory could not be written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Selection -------------------------------------------------------------------

/// A resolved selection: the id to instantiate and the entry it belongs to.
struct Target {
    std::string id;     // "S02", "S02-", "S15"
    std::string entry;  // "S02"
};

std::string canonical(const std::string& raw) {
    const auto [base, branch] = parse_instance_id(raw);
    const bool explicit_branch = !raw.empty() && (raw.back() == '+' || raw.back() == '-');
    return explicit_branch ? base + (branch > 0 ? "+" : "-") : base;
}

/// With expand_branches an entry id without a sign selects both branches.
std::vector<Target> select(const RunConfig& cfg, bool expand_branches) {
    if (cfg.all && !cfg.ids.empty()) throw ConfigError("--all and --id are exclusive");
    if (!cfg.all && cfg.ids.empty()) throw ConfigError("select entries with --id or --all");
    std::vector<Target> out;
    std::set<std::string> seen;
    const auto add = [&](const std::string& id) {
        if (seen.insert(id).second) out.push_back({id, parse_instance_id(id).first});
    };
    if (cfg.all) {
        for (const CatalogEntry& e : catalog()) {
            if (expand_branches && e.has_branches) {
                add(e.id + "+");
                add(e.id + "-");
            } else {
                add(e.id);
            }
        }
        return out;
    }
    for (const std::string& raw : cfg.ids) {
        std::string id;
        try {
            id = canonical(raw);
        } catch (const Error& e) {
            throw ConfigError(e.what());
        }
        const CatalogEntry& e = find_entry(parse_instance_id(id).first);
        if (expand_branches && e.has_branches && id == e.id) {
            add(e.id + "+");
            add(e.id + "-");
        } else {
            add(id);
        }
    }
    return out;
}

/// Checks overrides against the selected entries and the function pool.
void validate_overrides(const RunConfig& cfg, const std::vector<Target>& targets) {
    for (const auto& [slot, pool] : cfg.functions) {
        try {
            pool_function(pool);
        } catch (const Error&) {
            throw ConfigError("unknown pool function '" + pool + "'");
        }
        const bool used = std::any_of(targets.begin(), targets.end(), [&](const Target& t) {
            const auto& fs = find_entry(t.entry).free_slots;
            return std::any_of(fs.begin(), fs.end(), [&](const SlotSpec& s) { return s.name == slot; });
        });
        if (!used) throw ConfigError("no selected entry has a free slot '" + slot + "'");
    }
    for (const auto& [name, value] : cfg.constants) {
        if (!std::isfinite(value)) throw ConfigError("constant " + name + " is not finite");
        const bool used = std::any_of(targets.begin(), targets.end(), [&](const Target& t) {
            const auto& cs = find_entry(t.entry).constant_slots;
            return std::any_of(cs.begin(), cs.end(), [&](const auto& c) { return c.first == name; });
        });
        if (!used) throw ConfigError("no selected entry has a constant '" + name + "'");
    }
}

Slots slots_for(const RunConfig& cfg, const Target& t) {
    const CatalogEntry& e = find_entry(t.entry);
    Slots s = e.defaults();
    for (const auto& [name, value] : cfg.constants) {
        for (const auto& c : e.constant_slots) {
            if (c.first == name) s.constants[name] = value;
        }
    }
    for (const auto& [slot, pool] : cfg.functions) {
        for (const SlotSpec& spec : e.free_slots) {
            if (spec.name == slot) set_pool_function(s, slot, pool);
        }
    }
    return s;
}

// Parallel fan-out ------------------------------------------------------------

/// Runs job(i) for i in [0, n) on up to `jobs` threads; results land by index
/// so the output order never depends on scheduling.
template <typename R>
std::vector<R> fan_out(std::size_t n, int jobs, const std::function<R(std::size_t)>& job) {
    std::vector<R> out(n);
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) out[i] = job(i);
    };
    const std::size_t threads = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, jobs)));
    std::vector<std::thread> pool;
    for (std::size_t k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();
    return out;
}

// Output helpers --------------------------------------------------------------

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw IoError("cannot create directory " + dir);
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + path.string() + " for writing");
    f << content;
    f.flush();
    if (!f) throw IoError("cannot write " + path.string());
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

/// The only file that carries a timestamp.
void write_manifest(const RunConfig& cfg, const std::string& command,
                    const std::vector<std::string>& files) {
    ojson m;
    m["command"] = command;
    m["created"] = utc_timestamp();
    m["grid"] = {cfg.nx, cfg.nt};
    m["constants"] = cfg.constants;
    m["functions"] = cfg.functions;
    m["files"] = files;
    write_file(fs::path(cfg.out_dir) / "manifest.json", m.dump(2) + "\n");
}

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

// Commands --------------------------------------------------------------------

int cmd_list(const RunConfig& cfg, std::ostream& out) {
    std::vector<Target> targets;
    if (cfg.ids.empty()) {
        for (const CatalogEntry& e : catalog()) targets.push_back({e.id, e.id});
    } else {
        RunConfig c = cfg;
        c.all = false;
        targets = select(c, false);
    }
    std::vector<const CatalogEntry*> entries;
    std::set<std::string> seen;
    for (const Target& t : targets) {
        if (seen.insert(t.entry).second) entries.push_back(&find_entry(t.entry));
    }
    if (cfg.format == Format::Json) {
        ojson arr = ojson::array();
        for (const CatalogEntry* e : entries) {
            ojson j;
            j["id"] = e->id;
            j["description"] = e->description;
            j["variant"] = to_string(e->variant);
            j["formulas"] = e->formulas;
            ojson slots = ojson::array();
            for (const SlotSpec& s : e->free_slots) slots.push_back({{"name", s.name}, {"var", std::string(1, s.var)}});
            j["free_slots"] = slots;
            ojson consts = ojson::object();
            for (const auto& [k, v] : e->constant_slots) consts[k] = v;
            j["constants"] = consts;
            j["branches"] = e->has_branches;
            j["aux_ode"] = e->has_aux_ode;
            arr.push_back(std::move(j));
        }
        out << ojson{{"entries", arr}}.dump(2) << "\n";
        return kExitOk;
    }
    char line[512];
    std::snprintf(line, sizeof line, "%-4s %-3s %-8s %-22s %s\n", "id", "aux", "branches", "slots",
                  "description");
    out << line;
    for (const CatalogEntry* e : entries) {
        std::vector<std::string> slots;
        for (const SlotSpec& s : e->free_slots) slots.push_back(s.name + "(" + s.var + ")");
        std::snprintf(line, sizeof line, "%-4s %-3s %-8s %-22s %s\n", e->id.c_str(),
                      e->has_aux_ode ? "yes" : "no", e->has_branches ? "+/-" : "-",
                      join(slots, ",").c_str(), e->description.c_str());
        out << line;
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const std::vector<Target> targets = select(cfg, true);
    validate_overrides(cfg, targets);
    if (cfg.nx < kFdMinNodes || cfg.nt < kFdMinNodes) {
        throw ConfigError("grid must have at least " + std::to_string(kFdMinNodes) + " nodes per axis");
    }
    VerifyOptions opt;
    opt.nx = cfg.nx;
    opt.nt = cfg.nt;
    if (cfg.tol_analytic) opt.tol.analytic = *cfg.tol_analytic;
    if (cfg.tol_fd) opt.tol.fd = *cfg.tol_fd;

    const std::vector<VerificationReport> reports = fan_out<VerificationReport>(
        targets.size(), cfg.jobs,
        [&](std::size_t i) { return verify_entry(targets[i].id, slots_for(cfg, targets[i]), opt); });

    const bool all_pass =
        std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.pass; });
    std::set<std::string> entries;
    std::set<std::string> failed_entries;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        entries.insert(targets[i].entry);
        if (!reports[i].pass) failed_entries.insert(targets[i].entry);
    }
    const std::string doc = reports_to_json(reports);
    std::ostringstream text;
    for (const VerificationReport& r : reports) text << report_to_text(r) << "\n";
    text << entries.size() - failed_entries.size() << "/" << entries.size() << " entries passed ("
         << reports.size() << " instances)\n";
    out << (cfg.format == Format::Json ? doc : text.str());

    if (!cfg.out_dir.empty()) {
        ensure_dir(cfg.out_dir);
        ensure_dir((fs::path(cfg.out_dir) / "entries").string());
        std::vector<std::string> files{"report.json", "report.txt"};
        write_file(fs::path(cfg.out_dir) / "report.json", doc);
        write_file(fs::path(cfg.out_dir) / "report.txt", text.str());
        for (const std::string& entry : entries) {
            std::vector<VerificationReport> mine;
            for (std::size_t i = 0; i < reports.size(); ++i) {
                if (targets[i].entry == entry) mine.push_back(reports[i]);
            }
            write_file(fs::path(cfg.out_dir) / "entries" / (entry + ".json"), reports_to_json(mine));
            files.push_back("entries/" + entry + ".json");
        }
        write_manifest(cfg, "verify", files);
    }
    return all_pass ? kExitOk : kExitFailure;
}

int cmd_benchmark(const RunConfig& cfg, std::ostream& out) {
    const std::vector<Target> targets = select(cfg, false);
    validate_overrides(cfg, targets);
    if (cfg.nx_list.empty()) throw ConfigError("--nx needs at least one grid size");
    for (int n : cfg.nx_list) {
        if (n < 3) throw ConfigError("--nx values must be at least 3");
    }
    if (!(cfg.t_end > 0.0)) throw ConfigError("--t-end must be positive");
    if (!(cfg.dt_safety > 0.0 && cfg.dt_safety <= 1.0)) throw ConfigError("--dt-safety must lie in (0, 1]");
    MolConfig mol;
    mol.t_end = cfg.t_end;
    mol.dt_safety = cfg.dt_safety;

    const std::vector<ConvergenceReport> reports = fan_out<ConvergenceReport>(
        targets.size(), cfg.jobs, [&](std::size_t i) {
            try {
                return convergence_study(instantiate(targets[i].id, slots_for(cfg, targets[i])),
                                         cfg.nx_list, mol);
            } catch (const std::exception& e) {
                ConvergenceReport r;
                r.id = targets[i].id;
                r.error = e.what();
                return r;
            }
        });
    bool ok = true;
    std::ostringstream text;
    for (const ConvergenceReport& r : reports) {
        ok = ok && r.error.empty();
        text << convergence_to_text(r);
    }
    const std::string doc = convergence_to_json(reports);
    out << (cfg.format == Format::Json ? doc : text.str());
    if (!cfg.out_dir.empty()) {
        ensure_dir(cfg.out_dir);
        std::vector<std::string> files{"benchmark.json"};
        write_file(fs::path(cfg.out_dir) / "benchmark.json", doc);
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (!reports[i].error.empty()) continue;
            const std::string name = targets[i].id + "_convergence.csv";
            write_file(fs::path(cfg.out_dir) / name, reports[i].to_csv());
            files.push_back(name);
        }
        write_manifest(cfg, "benchmark", files);
    }
    return ok ? kExitOk : kExitFailure;
}

int cmd_export(const RunConfig& cfg, std::ostream& out) {
    const std::vector<Target> targets = select(cfg, false);
    validate_overrides(cfg, targets);
    if (cfg.nx < 2 || cfg.nt < 2) throw ConfigError("grid must have at least 2 nodes per axis");
    const std::string dir = cfg.out_dir.empty() ? "." : cfg.out_dir;

    struct Result {
        std::string csv;
        std::string error;
    };
    const std::vector<Result> results = fan_out<Result>(targets.size(), cfg.jobs, [&](std::size_t i) {
        try {
            const Instance inst = instantiate(targets[i].id, slots_for(cfg, targets[i]));
            return Result{solution_grid(inst, cfg.nx, cfg.nt).to_csv(), ""};
        } catch (const std::exception& e) {
            return Result{"", e.what()};
        }
    });
    ensure_dir(dir);
    bool ok = true;
    std::vector<std::string> files;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i].error.empty()) {
            ok = false;
            out << targets[i].id << "  ERROR  " << results[i].error << "\n";
            continue;
        }
        const std::string name = targets[i].id + ".csv";
        write_file(fs::path(dir) / name, results[i].csv);
        files.push_back(name);
        out << (fs::path(dir) / name).string() << "\n";
    }
    RunConfig c = cfg;
    c.out_dir = dir;
    write_manifest(c, "export", files);
    return ok ? kExitOk : kExitFailure;
}

// Flag parsing ----------------------------------------------------------------

std::pair<int, int> parse_grid(const std::string& s) {
    static const std::regex re(R"(^\s*(\d+)\s*[xX]\s*(\d+)\s*$)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw ConfigError("--grid expects NXxNT, got '" + s + "'");
    return {std::stoi(m[1]), std::stoi(m[2])};
}

std::pair<std::string, std::string> split_assignment(const std::string& s, const char* flag) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == s.size()) {
        throw ConfigError(std::string(flag) + " expects NAME=VALUE, got '" + s + "'");
    }
    return {s.substr(0, eq), s.substr(eq + 1)};
}

double parse_number(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw ConfigError(what + ": '" + s + "' is not a number");
    return v;
}

/// Raw flag values, merged into a RunConfig after parsing.
struct Flags {
    std::vector<std::string> ids;
    bool all = false;
    std::string grid = "41x41";
    std::optional<double> tol_analytic;
    std::optional<double> tol_fd;
    std::vector<std::string> set_const;
    std::vector<std::string> set_fn;
    std::string out;
    std::string format = "text";
    int jobs = 1;
    std::string nx = "21,41,81";
    double t_end = 0.05;
    double dt_safety = 0.9;
};

RunConfig to_config(const Flags& f) {
    RunConfig c;
    for (const std::string& s : f.ids) {
        // Accept comma-separated lists as well as repeated flags.
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) c.ids.push_back(item);
        }
    }
    c.all = f.all;
    std::tie(c.nx, c.nt) = parse_grid(f.grid);
    c.tol_analytic = f.tol_analytic;
    c.tol_fd = f.tol_fd;
    if ((c.tol_analytic && !(*c.tol_analytic > 0.0)) || (c.tol_fd && !(*c.tol_fd > 0.0))) {
        throw ConfigError("tolerances must be positive");
    }
    for (const std::string& s : f.set_const) {
        const auto [name, value] = split_assignment(s, "--set-const");
        c.constants[name] = parse_number(value, "--set-const " + name);
    }
    for (const std::string& s : f.set_fn) {
        const auto [slot, pool] = split_assignment(s, "--set-fn");
        c.functions[slot] = pool;
    }
    c.out_dir = f.out;
    if (f.format == "text") {
        c.format = Format::Text;
    } else if (f.format == "json") {
        c.format = Format::Json;
    } else {
        throw ConfigError("--format must be text or json");
    }
    if (f.jobs < 1) throw ConfigError("--jobs must be at least 1");
    c.jobs = f.jobs;
    c.nx_list.clear();
    std::stringstream ss(f.nx);
    std::string item;
    while (std::getline(ss, item, ',')) {
        c.nx_list.push_back(static_cast<int>(parse_number(item, "--nx")));
    }
    c.t_end = f.t_end;
    c.dt_safety = f.dt_safety;
    return c;
}

void add_selection(CLI::App* app, Flags& f) {
    app->add_option("--id", f.ids, "Entry ids (S01..S33, optionally with a +/- branch)");
    app->add_flag("--all", f.all, "Select every entry");
}

void add_overrides(CLI::App* app, Flags& f) {
    app->add_option("--set-const", f.set_const, "Override a constant, NAME=VALUE");
    app->add_option("--set-fn", f.set_fn,
                    "Replace a free function by a pool function, SLOT=POOLID "
                    "(one, linear, quadratic_plus_one, exp, exp_neg, cos_plus_two)");
    app->add_option("--jobs", f.jobs, "Worker threads");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solutions of u_t = [a f u_x]_x + b g u_x + c h: catalog, verification and "
                 "benchmarks"};
    app.set_config("--config", "", "Key/value config file (INI or TOML); flags override it");
    app.require_subcommand(1);
    Flags f;

    CLI::App* list = app.add_subcommand("list", "List catalog entries");
    list->add_option("--id", f.ids, "Show only these entries");
    list->add_option("--format", f.format, "text or json");

    CLI::App* verify = app.add_subcommand("verify", "Verify entries against their PDE");
    add_selection(verify, f);
    verify->add_option("--grid", f.grid, "Grid shape NXxNT");
    verify->add_option("--tol-analytic", f.tol_analytic, "Tolerance of the analytic residuals");
    verify->add_option("--tol-fd", f.tol_fd, "Tolerance of the finite-difference residual");
    add_overrides(verify, f);
    verify->add_option("--out", f.out, "Directory for reports");
    verify->add_option("--format", f.format, "text or json");

    CLI::App* bench = app.add_subcommand("benchmark", "Method-of-lines convergence studies");
    add_selection(bench, f);
    bench->add_option("--nx", f.nx, "Comma-separated node counts");
    bench->add_option("--t-end", f.t_end, "Integration length");
    bench->add_option("--dt-safety", f.dt_safety, "Fraction of the stable time step");
    add_overrides(bench, f);
    bench->add_option("--out", f.out, "Directory for CSV and JSON output");
    bench->add_option("--format", f.format, "text or json");

    CLI::App* exp = app.add_subcommand("export", "Write (x, t, theta, u) grids as CSV");
    add_selection(exp, f);
    exp->add_option("--grid", f.grid, "Grid shape NXxNT");
    add_overrides(exp, f);
    exp->add_option("--out", f.out, "Output directory (default: current directory)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        const RunConfig cfg = to_config(f);
        if (list->parsed()) return cmd_list(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (bench->parsed()) return cmd_benchmark(cfg, out);
        return cmd_export(cfg, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const UnknownEntry& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace fsv::cli
