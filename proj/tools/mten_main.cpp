#include "mten/bench.hpp"
#include "mten/posdef.hpp"
#include "mten/tensor_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <iostream>
#include <string>

namespace {

using nlohmann::json;

constexpr int kExitError = 10;

std::string format_double(double value) {
    char buffer[64];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, end);
}

std::string format_vector(const mten::Vector& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) out += ' ';
        out += format_double(values[i]);
    }
    return out;
}

const char* status_name(mten::MStatus status) {
    switch (status) {
        case mten::MStatus::MTensor: return "m-tensor";
        case mten::MStatus::NotMTensor: return "not-m-tensor";
        case mten::MStatus::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

const char* status_name(mten::PDStatus status) {
    switch (status) {
        case mten::PDStatus::PositiveDefinite: return "positive-definite";
        case mten::PDStatus::NotPositiveDefinite: return "not-positive-definite";
        case mten::PDStatus::Inapplicable: return "inapplicable";
        case mten::PDStatus::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

struct SettingsFlags {
    double tol = 1e-10;
    int max_iter = 10000;
    double sigma = 1.0;
    double epsilon = 0.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--tol", tol, "relative bracket-width stopping threshold");
        cmd->add_option("--max-iter", max_iter, "iteration cap");
        cmd->add_option("--sigma", sigma, "diagonal shift (> 0)");
        cmd->add_option("--epsilon", epsilon, "all-ones perturbation magnitude (>= 0)");
    }

    mten::IterationSettings to_settings() const {
        mten::IterationSettings settings;
        settings.tol = tol;
        settings.max_iter = max_iter;
        settings.sigma = sigma;
        settings.epsilon = epsilon;
        return settings;
    }
};

int run_gen(int order, int dim, double diag_offset, std::uint64_t seed,
            const std::string& out_path) {
    mten::GenSpec spec;
    spec.order = order;
    spec.dim = dim;
    spec.diag_offset = diag_offset;
    spec.seed = seed;
    const mten::DenseTensor tensor = mten::random_z_tensor(spec);
    mten::write_tensor_file(out_path, tensor, mten::StorageMode::Dense);
    std::cout << "wrote " << out_path << " (order " << order << ", dim " << dim << ", "
              << tensor.size() << " entries)\n";
    return 0;
}

int run_eig(const std::string& in_path, const SettingsFlags& flags,
            const std::string& format) {
    const mten::DenseTensor tensor = mten::read_tensor_file(in_path);
    const mten::SpectralOutcome outcome =
        mten::largest_eigenvalue(tensor, flags.to_settings());
    if (format == "json") {
        json report{
            {"command", "eig"},
            {"order", tensor.order()},
            {"dim", tensor.dim()},
            {"lambda", outcome.lambda},
            {"bracket",
             {{"lower", outcome.final_bracket.lower}, {"upper", outcome.final_bracket.upper}}},
            {"iterations", outcome.iterations},
            {"residual", outcome.residual},
            {"converged", outcome.converged},
            {"epsilon_used", outcome.epsilon_used},
            {"eigenvector", outcome.eigenvector},
        };
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "lambda       " << format_double(outcome.lambda) << "\n"
                  << "bracket      [" << format_double(outcome.final_bracket.lower) << ", "
                  << format_double(outcome.final_bracket.upper) << "]\n"
                  << "iterations   " << outcome.iterations << "\n"
                  << "residual     " << format_double(outcome.residual) << "\n"
                  << "converged    " << (outcome.converged ? "yes" : "no") << "\n"
                  << "epsilon-used " << format_double(outcome.epsilon_used) << "\n"
                  << "eigenvector  " << format_vector(outcome.eigenvector) << "\n";
    }
    return outcome.converged ? 0 : 2;
}

int run_classify(const std::string& in_path, const SettingsFlags& flags,
                 const std::string& format) {
    const mten::DenseTensor tensor = mten::read_tensor_file(in_path);
    const mten::EigenvalueBounds bounds = mten::real_eigenvalue_bounds(tensor);
    const mten::MTensorVerdict verdict =
        mten::classify_m_tensor(tensor, flags.to_settings());
    if (format == "json") {
        json report{
            {"command", "classify"},
            {"order", tensor.order()},
            {"dim", tensor.dim()},
            {"status", status_name(verdict.status)},
            {"tau", verdict.tau},
            {"guard_band", verdict.guard_band},
            {"upper_bound", verdict.upper_bound},
            {"lower_bound", bounds.lower},
            {"iterations", verdict.spectral.iterations},
            {"residual", verdict.spectral.residual},
            {"converged", verdict.spectral.converged},
            {"epsilon_used", verdict.spectral.epsilon_used},
            {"eigenvector", verdict.eigenvector},
        };
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "status       " << status_name(verdict.status) << "\n"
                  << "tau          " << format_double(verdict.tau) << "\n"
                  << "guard-band   " << format_double(verdict.guard_band) << "\n"
                  << "U            " << format_double(verdict.upper_bound) << "\n"
                  << "L            " << format_double(bounds.lower) << "\n"
                  << "iterations   " << verdict.spectral.iterations << "\n"
                  << "residual     " << format_double(verdict.spectral.residual) << "\n"
                  << "converged    " << (verdict.spectral.converged ? "yes" : "no") << "\n"
                  << "epsilon-used " << format_double(verdict.spectral.epsilon_used) << "\n"
                  << "eigenvector  " << format_vector(verdict.eigenvector) << "\n";
    }
    switch (verdict.status) {
        case mten::MStatus::MTensor: return 0;
        case mten::MStatus::NotMTensor: return 1;
        case mten::MStatus::Indeterminate: return 2;
    }
    return 2;
}

int run_posdef(const std::string& in_path, const SettingsFlags& flags, int samples,
               std::uint64_t seed, const std::string& format) {
    const mten::DenseTensor tensor = mten::read_tensor_file(in_path);
    const mten::PDVerdict verdict =
        mten::test_positive_definite(tensor, flags.to_settings(), samples, seed);
    const mten::DenseTensor symmetric = mten::symmetrize(tensor);
    if (format == "json") {
        json report{
            {"command", "posdef"},
            {"order", tensor.order()},
            {"dim", tensor.dim()},
            {"status", status_name(verdict.status)},
            {"reason", verdict.reason},
            {"symmetrized", verdict.symmetrized},
            {"tau", nullptr},
            {"witness", nullptr},
            {"witness_form_value", nullptr},
        };
        if (verdict.tau) report["tau"] = *verdict.tau;
        if (verdict.witness) {
            report["witness"] = *verdict.witness;
            report["witness_form_value"] = mten::eval_form(symmetric, *verdict.witness);
        }
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "status       " << status_name(verdict.status);
        if (!verdict.reason.empty()) std::cout << " (" << verdict.reason << ")";
        std::cout << "\n";
        if (verdict.tau) std::cout << "tau          " << format_double(*verdict.tau) << "\n";
        if (verdict.witness) {
            std::cout << "witness      " << format_vector(*verdict.witness) << "\n"
                      << "form-value   "
                      << format_double(mten::eval_form(symmetric, *verdict.witness)) << "\n";
        }
        std::cout << "symmetrized  " << (verdict.symmetrized ? "yes" : "no") << "\n";
    }
    switch (verdict.status) {
        case mten::PDStatus::PositiveDefinite: return 0;
        case mten::PDStatus::NotPositiveDefinite: return 1;
        case mten::PDStatus::Indeterminate: return 2;
        case mten::PDStatus::Inapplicable: return 3;
    }
    return 2;
}

int run_bench(const mten::BenchConfig& config, const std::string& format) {
    const mten::BenchRow row = mten::run_bench(config);
    if (format == "json") {
        json report{
            {"command", "bench"},
            {"order", row.order},
            {"dim", row.dim},
            {"a_d", row.diag_offset},
            {"trials", row.trials},
            {"yes", row.yes},
            {"no", row.no},
            {"indeterminate", row.indeterminate},
            {"avg_seconds", row.avg_seconds},
            {"seed", row.seed},
            {"workers", config.workers},
        };
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "m=" << row.order << " n=" << row.dim << " a_d="
                  << format_double(row.diag_offset) << " trials=" << row.trials
                  << " yes=" << row.yes << " no=" << row.no
                  << " indeterminate=" << row.indeterminate
                  << " avg_seconds=" << format_double(row.avg_seconds)
                  << " seed=" << row.seed << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dense tensor spectral toolkit: largest eigenvalues of nonnegative "
                 "tensors, M-tensor classification, positive definiteness"};
    app.require_subcommand(1);

    const auto format_check = CLI::IsMember({"text", "json"});

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random Z-tensor file");
    int gen_order = 3, gen_dim = 10;
    double gen_ad = 1.0;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--order", gen_order, "tensor order m")->required();
    gen->add_option("--dim", gen_dim, "tensor dimension n")->required();
    gen->add_option("--ad", gen_ad, "diagonal offset (> 0)")->required();
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output path")->required();

    // eig
    auto* eig = app.add_subcommand("eig", "largest eigenvalue of a nonnegative tensor");
    std::string eig_in, eig_format = "text";
    SettingsFlags eig_flags;
    eig->add_option("input", eig_in, "tensor file")->required();
    eig_flags.attach(eig);
    eig->add_option("--format", eig_format, "report format")->check(format_check);

    // classify
    auto* classify = app.add_subcommand("classify", "M-tensor test for a Z-tensor");
    std::string classify_in, classify_format = "text";
    SettingsFlags classify_flags;
    classify->add_option("input", classify_in, "tensor file")->required();
    classify_flags.attach(classify);
    classify->add_option("--format", classify_format, "report format")->check(format_check);

    // posdef
    auto* posdef = app.add_subcommand("posdef", "positive definiteness of the form");
    std::string posdef_in, posdef_format = "text";
    SettingsFlags posdef_flags;
    int posdef_samples = 1000;
    std::uint64_t posdef_seed = 1;
    posdef->add_option("input", posdef_in, "tensor file")->required();
    posdef_flags.attach(posdef);
    posdef->add_option("--samples", posdef_samples, "witness sampling trials");
    posdef->add_option("--seed", posdef_seed, "witness sampling seed");
    posdef->add_option("--format", posdef_format, "report format")->check(format_check);

    // bench
    auto* bench = app.add_subcommand("bench", "classify a batch of random Z-tensors");
    mten::BenchConfig bench_config;
    SettingsFlags bench_flags;
    std::string bench_format = "text";
    bench->add_option("--order", bench_config.order, "tensor order m")->required();
    bench->add_option("--dim", bench_config.dim, "tensor dimension n")->required();
    bench->add_option("--ad", bench_config.diag_offset, "diagonal offset (> 0)")->required();
    bench->add_option("--trials", bench_config.trials, "number of tensors");
    bench->add_option("--seed", bench_config.seed, "base seed; trial k uses seed + k");
    bench->add_option("--workers", bench_config.workers, "worker threads (0 = auto)");
    bench_flags.attach(bench);
    bench->add_option("--format", bench_format, "report format")->check(format_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (gen->parsed()) return run_gen(gen_order, gen_dim, gen_ad, gen_seed, gen_out);
        if (eig->parsed()) return run_eig(eig_in, eig_flags, eig_format);
        if (classify->parsed()) return run_classify(classify_in, classify_flags, classify_format);
        if (posdef->parsed()) {
            return run_posdef(posdef_in, posdef_flags, posdef_samples, posdef_seed,
                              posdef_format);
        }
        if (bench->parsed()) {
            bench_config.settings = bench_flags.to_settings();
            return run_bench(bench_config, bench_format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
