#include "oldroyd_cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#define TOML_EXCEPTIONS 1
#include "toml.hpp"

#include "oldroyd/errors.hpp"
#include "oldroyd/para/estimates.hpp"

namespace oldroyd::cli {

namespace {

// Reads keys from one table and remembers which ones were consumed.
class Section {
public:
    Section(const toml::table* table, std::string name) : table_(table), name_(std::move(name)) {}

    bool present() const { return table_ != nullptr; }

    template <class T>
    std::optional<T> get(const std::string& key) {
        if (!table_) return std::nullopt;
        used_.insert(key);
        const toml::node* node = table_->get(key);
        if (!node) return std::nullopt;
        if constexpr (std::is_same_v<T, double>) {
            if (auto v = node->value<double>()) return *v;
        } else if constexpr (std::is_same_v<T, bool>) {
            if (node->is_boolean()) return node->as_boolean()->get();
        } else if constexpr (std::is_same_v<T, std::string>) {
            if (node->is_string()) return node->as_string()->get();
        } else if constexpr (std::is_integral_v<T>) {
            if (node->is_integer()) return static_cast<T>(node->as_integer()->get());
        }
        throw ConfigError(where(key) + ": wrong type");
    }

    template <class T>
    T require(const std::string& key) {
        auto v = get<T>(key);
        if (!v) throw ConfigError(where(key) + ": missing required key");
        return *v;
    }

    template <class T>
    std::optional<std::vector<T>> get_array(const std::string& key) {
        if (!table_) return std::nullopt;
        used_.insert(key);
        const toml::node* node = table_->get(key);
        if (!node) return std::nullopt;
        const toml::array* arr = node->as_array();
        if (!arr) throw ConfigError(where(key) + ": expected an array");
        std::vector<T> out;
        for (const toml::node& item : *arr) {
            std::optional<T> v;
            if constexpr (std::is_same_v<T, double>) {
                v = item.value<double>();
            } else if constexpr (std::is_same_v<T, std::string>) {
                if (item.is_string()) v = item.as_string()->get();
            } else {
                if (item.is_integer()) v = static_cast<T>(item.as_integer()->get());
            }
            if (!v) throw ConfigError(where(key) + ": wrong element type");
            out.push_back(*v);
        }
        return out;
    }

    void reject_unknown() const {
        if (!table_) return;
        for (const auto& [k, v] : *table_) {
            std::string key(k.str());
            if (!used_.count(key)) throw ConfigError(where(key) + ": unknown key");
        }
    }

    std::string where(const std::string& key) const { return "[" + name_ + "]." + key; }

private:
    const toml::table* table_;
    std::string name_;
    std::set<std::string> used_;
};

void check(bool ok, const std::string& what) {
    if (!ok) throw ConfigError(what);
}

}  // namespace

model::ModelParams ExperimentConfig::params() const { return model::ModelParams(Re, We, omega, alpha, dim); }

ExperimentConfig parse_config(const std::string& text, const std::string& source) {
    toml::table root;
    try {
        root = toml::parse(text, source);
    } catch (const toml::parse_error& e) {
        std::ostringstream msg;
        msg << source << ": " << e.description() << " (line " << e.source().begin.line << ")";
        throw ConfigError(msg.str());
    }

    static const std::set<std::string> known{"grid",     "params",    "integrator",   "initial_data", "analysis",
                                             "estimates", "linear_decay", "sweep", "output"};
    for (const auto& [k, v] : root) {
        std::string key(k.str());
        if (!known.count(key)) throw ConfigError(source + ": unknown section '" + key + "'");
        if (!v.is_table()) throw ConfigError(source + ": '" + key + "' must be a table");
    }
    auto section = [&](const char* name) { return Section(root[name].as_table(), name); };

    ExperimentConfig cfg;

    Section grid = section("grid");
    cfg.dim = grid.require<int>("dim");
    cfg.n = grid.require<int>("n");
    cfg.box_length = grid.get<double>("box_length").value_or(cfg.box_length);
    grid.reject_unknown();
    check(cfg.dim == 2 || cfg.dim == 3, "[grid].dim must be 2 or 3");
    check(cfg.n >= 8 && (cfg.n & (cfg.n - 1)) == 0, "[grid].n must be a power of two >= 8");
    check(cfg.box_length > 0.0, "[grid].box_length must be positive");

    Section params = section("params");
    cfg.Re = params.require<double>("Re");
    cfg.We = params.require<double>("We");
    cfg.omega = params.require<double>("omega");
    cfg.alpha = params.require<double>("alpha");
    params.reject_unknown();
    (void)cfg.params();

    Section integ = section("integrator");
    cfg.integrator.dt = integ.require<double>("dt");
    cfg.integrator.t_end = integ.require<double>("t_end");
    cfg.integrator.cfl_safety = integ.get<double>("cfl_safety").value_or(cfg.integrator.cfl_safety);
    cfg.integrator.output_every = integ.get<double>("output_every").value_or(cfg.integrator.output_every);
    bool nonlinear = integ.get<bool>("nonlinear").value_or(true);
    cfg.integrator.nonlinearity = nonlinear ? model::Nonlinearity::on : model::Nonlinearity::off;
    integ.reject_unknown();
    cfg.integrator.validate();

    Section init = section("initial_data");
    InitialDataSpec& id = cfg.initial;
    std::string mode = init.get<std::string>("mode").value_or("random_spectrum");
    if (mode == "random_spectrum") {
        id.mode = InitialMode::random_spectrum;
    } else if (mode == "analytic_preset") {
        id.mode = InitialMode::analytic_preset;
    } else if (mode == "checkpoint") {
        id.mode = InitialMode::checkpoint;
    } else {
        throw ConfigError("[initial_data].mode: unknown mode '" + mode + "'");
    }
    if (id.mode == InitialMode::checkpoint) {
        id.checkpoint = init.require<std::string>("checkpoint");
    } else {
        id.uh = init.require<double>("uh");
        id.ud = init.require<double>("ud");
        id.tau = init.require<double>("tau");
    }
    id.envelope = init.get<double>("envelope").value_or(id.envelope);
    id.k_cut = init.get<double>("k_cut").value_or(id.k_cut);
    id.seed = init.get<std::uint64_t>("seed").value_or(id.seed);
    id.preset = init.get<std::string>("preset").value_or(id.preset);
    init.reject_unknown();
    check(id.uh >= 0.0 && id.ud >= 0.0 && id.tau >= 0.0, "[initial_data] amplitudes must be non-negative");
    check(id.k_cut > 0.0, "[initial_data].k_cut must be positive");
    check(id.preset == "single_modes", "[initial_data].preset: unknown preset '" + id.preset + "'");

    Section an = section("analysis");
    cfg.analysis.yq = an.get<bool>("yq").value_or(true);
    std::string constants = an.get<std::string>("constants").value_or("fit");
    check(constants == "fit" || constants == "given", "[analysis].constants must be \"fit\" or \"given\"");
    cfg.analysis.fit_constants = constants == "fit";
    cfg.analysis.C1 = an.get<double>("C1").value_or(1.0);
    cfg.analysis.C2 = an.get<double>("C2").value_or(1.0);
    cfg.analysis.C3 = an.get<double>("C3").value_or(1.0);
    cfg.analysis.C0 = an.get<double>("C0").value_or(1.0);
    an.reject_unknown();
    check(cfg.analysis.C1 > 0 && cfg.analysis.C2 > 0 && cfg.analysis.C3 > 0 && cfg.analysis.C0 > 0,
          "[analysis] constants must be positive");

    Section est = section("estimates");
    if (auto kinds = est.get_array<std::string>("kinds")) {
        for (const auto& k : *kinds) {
            check(para::parse_estimate_kind(k).has_value(), "[estimates].kinds: unknown estimate '" + k + "'");
        }
        cfg.estimates.kinds = *kinds;
    }
    cfg.estimates.ensemble_size = est.get<int>("ensemble_size").value_or(cfg.estimates.ensemble_size);
    if (auto e = est.get_array<double>("envelopes")) cfg.estimates.envelopes = *e;
    cfg.estimates.k_cut = est.get<double>("k_cut").value_or(0.0);
    est.reject_unknown();
    check(cfg.estimates.ensemble_size > 0, "[estimates].ensemble_size must be positive");
    check(!cfg.estimates.envelopes.empty(), "[estimates].envelopes must not be empty");

    Section ld = section("linear_decay");
    if (auto q = ld.get_array<int>("q")) cfg.linear_decay.q = *q;
    cfg.linear_decay.n = ld.get<int>("n").value_or(cfg.linear_decay.n);
    cfg.linear_decay.samples = ld.get<int>("samples").value_or(cfg.linear_decay.samples);
    cfg.linear_decay.resolution = ld.get<double>("resolution").value_or(cfg.linear_decay.resolution);
    ld.reject_unknown();
    check(cfg.linear_decay.samples >= 3, "[linear_decay].samples must be >= 3");
    check(cfg.linear_decay.resolution > 0.0, "[linear_decay].resolution must be positive");

    Section sw = section("sweep");
    if (auto w = sw.get_array<double>("omega")) cfg.sweep.omega = *w;
    if (auto s = sw.get_array<double>("scale")) cfg.sweep.scale = *s;
    sw.reject_unknown();
    for (double w : cfg.sweep.omega) check(w > 0.0 && w < 1.0, "[sweep].omega entries must lie in (0,1)");
    for (double s : cfg.sweep.scale) check(s >= 0.0, "[sweep].scale entries must be non-negative");

    Section out = section("output");
    cfg.out_dir = out.get<std::string>("dir").value_or("out");
    out.reject_unknown();

    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), path.string());
}

}  // namespace oldroyd::cli
