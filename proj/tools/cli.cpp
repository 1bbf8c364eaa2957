#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "report.hpp"
#include "signalling/errors.hpp"
#include "signalling/io.hpp"

namespace signalling::cli {

namespace {

SolverLimits limits_for(const AnalysisConfig& cfg, const UtilityMatrix& u) {
    SolverLimits limits;
    if (cfg.limit_q) {
        if (u.q() > *cfg.limit_q)
            throw SizeLimitError("q = " + std::to_string(u.q()) + " exceeds --limit-q " + std::to_string(*cfg.limit_q));
        limits.max_vertices = limits.max_cover_vertices = limits.max_partition_vertices = *cfg.limit_q;
    }
    return limits;
}

template <typename Report>
void emit(const AnalysisConfig& cfg, const Report& report, std::ostream& out) {
    if (cfg.format == "json")
        out << to_json(report).dump(2) << "\n";
    else
        out << to_text(report);
}

void run_behavioral(const AnalysisConfig& cfg, const UtilityMatrix& u, std::ostream& out) {
    if (cfg.limit_q && u.q() > *cfg.limit_q)
        throw SizeLimitError("q = " + std::to_string(u.q()) + " exceeds --limit-q " + std::to_string(*cfg.limit_q));
    Prior prior = cfg.prior ? Prior::parse(*cfg.prior) : Prior::uniform(u.q());
    GridSearchOptions options;
    options.max_points = cfg.budget;
    std::ofstream stream;
    if (!cfg.stream.empty()) {
        stream.open(cfg.stream);
        if (!stream) throw IoError(cfg.stream + ": cannot open for writing");
        options.on_point = [&stream](const BehavioralStrategy& pi, const Rational& value, const std::string& label) {
            json line = {{"pi", to_json(pi)}, {"value", to_json(value)}, {"class", label}};
            stream << line.dump() << "\n";
        };
    }
    BehavioralReport report{u, prior, has_skew_structure(u), grid_search_sup(u, prior, cfg.grid, options)};
    if (stream.is_open() && !stream) throw IoError(cfg.stream + ": write failed");
    emit(cfg, report, out);
}

void run_gen(const AnalysisConfig& cfg, std::ostream& out) {
    auto u = generate_matrix(cfg.q, cfg.lo, cfg.hi, cfg.seed, cfg.symmetric, cfg.skew);
    const std::string text = cfg.format == "json" ? format_matrix_json(u) : format_matrix_csv(u);
    if (cfg.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.output);
    if (!file) throw IoError(cfg.output + ": cannot open for writing");
    file << text;
    if (!file) throw IoError(cfg.output + ": write failed");
}

void dispatch(const AnalysisConfig& cfg, std::ostream& out) {
    if (cfg.command == "gen") return run_gen(cfg, out);
    const auto u = read_matrix_file(cfg.input);
    if (cfg.command == "analyze") return emit(cfg, analyze(u, limits_for(cfg, u)), out);
    if (cfg.command == "enumerate") return emit(cfg, enumerate(u, limits_for(cfg, u)), out);
    if (cfg.command == "duality") return emit(cfg, duality(u, limits_for(cfg, u)), out);
    if (cfg.command == "behavioral") return run_behavioral(cfg, u, out);
    throw Error("unknown command " + cfg.command);
}

}  // namespace

UtilityMatrix generate_matrix(int q, long long lo, long long hi, std::uint64_t seed, bool symmetric, bool skew) {
    if (q < 1) throw DomainError("q must be at least 1");
    if (lo > hi) throw DomainError("empty entry range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    if (symmetric && skew) throw DomainError("a matrix cannot be both symmetric and skew-symmetric unless it is zero");
    if (skew && lo != -hi) throw DomainError("skew-symmetric generation needs a range of the form [-h, h]");

    std::mt19937_64 rng(seed);
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    auto draw = [&] { return lo + static_cast<long long>(rng() % span); };

    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(q), std::vector<Rational>(static_cast<std::size_t>(q)));
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            auto& e = rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            if ((symmetric || skew) && y < x) {
                const auto& mirror = rows[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
                e = skew ? -mirror : mirror;
            } else if (skew && x == y) {
                e = 0;
            } else {
                e = draw();
            }
        }
    return UtilityMatrix::from_rows(rows);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    AnalysisConfig cfg;
    CLI::App app{"Exact analysis of finite sender-receiver signalling games", "signalling"};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--limit-q", cfg.limit_q, "Refuse alphabets larger than K and cap the exact solvers at K vertices")
        ->check(CLI::PositiveNumber);

    auto add_input = [&](CLI::App* sub) { sub->add_option("--input,-i", cfg.input, "Matrix file (JSON or CSV)")->required(); };

    auto* analyze_cmd = app.add_subcommand("analyze", "Sender graphs, informativeness, extraction capacity, classes");
    add_input(analyze_cmd);
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List every equilibrium partition");
    add_input(enumerate_cmd);
    auto* duality_cmd = app.add_subcommand("duality", "Packing and covering 0-1 programs on the strong sender graph");
    add_input(duality_cmd);

    auto* behavioral_cmd = app.add_subcommand("behavioral", "Grid search over behavioral sender strategies (q = 3)");
    add_input(behavioral_cmd);
    behavioral_cmd->add_option("--grid", cfg.grid, "Grid denominator N")->check(CLI::PositiveNumber)->capture_default_str();
    behavioral_cmd->add_option("--prior", cfg.prior, "Prior as \"p0,p1,...\" (default uniform)");
    behavioral_cmd->add_option("--budget", cfg.budget, "Largest admissible grid size")->capture_default_str();
    behavioral_cmd->add_option("--stream", cfg.stream, "Write one JSON line per grid point to this file");

    auto* gen_cmd = app.add_subcommand("gen", "Generate a reproducible random integer utility matrix");
    gen_cmd->add_option("--q", cfg.q, "Alphabet size")->check(CLI::PositiveNumber)->capture_default_str();
    gen_cmd->add_option("--lo", cfg.lo, "Smallest entry")->capture_default_str();
    gen_cmd->add_option("--hi", cfg.hi, "Largest entry")->capture_default_str();
    gen_cmd->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    gen_cmd->add_flag("--symmetric", cfg.symmetric, "U(x,y) = U(y,x)");
    gen_cmd->add_flag("--skew", cfg.skew, "Zero diagonal and U(x,y) = -U(y,x)");
    gen_cmd->add_option("--output,-o", cfg.output, "Output file (default standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        dispatch(cfg, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsageError;
    } catch (const DimensionError& e) {
        err << "dimension error: " << e.what() << "\n";
        return kUsageError;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << "\n";
        return kUsageError;
    } catch (const DomainError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kUsageError;
    } catch (const SizeLimitError& e) {
        err << "size limit: " << e.what() << "\n";
        return kSizeLimit;
    } catch (const UnsupportedError& e) {
        err << "unsupported: " << e.what() << "\n";
        return kSizeLimit;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kOk;
}

}  // namespace signalling::cli
