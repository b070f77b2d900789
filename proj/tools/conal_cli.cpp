#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conal/geodesics.hpp"
#include "conal/io_json.hpp"
#include "conal/speech.hpp"
#include "conal/wav.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw conal::InvalidInputError("cannot open output file " + out_path);
    out << text;
}

int run(int argc, char** argv) {
    CLI::App app{"Conal distances between rational spectral densities"};
    app.require_subcommand(1);

    int grid_n = 4096;
    double tol = 1e-8;
    std::uint64_t seed = 0;
    std::string out_path;
    app.add_option("--grid", grid_n, "Frequency grid size");
    app.add_option("--tol", tol, "Numerical tolerance");
    app.add_option("--seed", seed, "RNG seed");
    app.add_option("--out", out_path, "Output path (default stdout)");

    auto* dist = app.add_subcommand("distance", "Distance between two spectra");
    std::string metric = "thompson", path_name = "rational";
    std::vector<std::string> dist_files;
    dist->add_option("--metric", metric, "thompson|hilbert|riemannian|frobenius");
    dist->add_option("--path", path_name, "rational|grid");
    dist->add_option("inputs", dist_files, "Two spectrum files")->expected(2)->required();

    auto* fact = app.add_subcommand("factorize", "Minimum-phase spectral factor");
    std::string fact_file;
    fact->add_option("input", fact_file, "Spectrum file")->required();

    auto* norm = app.add_subcommand("norm", "System norm");
    std::string kind = "hinf", norm_file;
    norm->add_option("--kind", kind, "hinf|h2");
    norm->add_option("input", norm_file, "System file")->required();

    auto* geo = app.add_subcommand("geodesic", "Geodesic points between two spectra");
    std::string geo_kind = "finsler", out_format = "json";
    std::vector<double> taus;
    std::vector<std::string> geo_files;
    geo->add_option("--kind", geo_kind, "finsler|riemannian|hilbert");
    geo->add_option("--tau", taus, "Parameter values")->delimiter(',')->required();
    geo->add_option("--out-format", out_format, "json|csv");
    geo->add_option("inputs", geo_files, "Two spectrum files")->expected(2)->required();

    auto* morph_cmd = app.add_subcommand("morph", "LPC speech morphing");
    conal::MorphConfig mc;
    std::string pitch_mode = "linear";
    std::vector<std::string> wav_files;
    morph_cmd->add_option("--tau", mc.tau, "Morph parameter");
    morph_cmd->add_option("--order", mc.order, "AR order");
    morph_cmd->add_option("--frame-ms", mc.frame_ms, "Frame length, ms");
    morph_cmd->add_option("--hop-ms", mc.hop_ms, "Hop length, ms");
    morph_cmd->add_option("--preemphasis", mc.preemphasis, "Pre-emphasis coefficient");
    morph_cmd->add_option("--pitch-mode", pitch_mode, "linear|geometric");
    morph_cmd->add_option("inputs", wav_files, "Two WAV files")->expected(2)->required();

    CLI11_PARSE(app, argc, argv);
    conal::FrequencyGrid grid{grid_n};

    if (*dist) {
        conal::SpectrumInput a = conal::read_spectrum_file(dist_files[0]);
        conal::SpectrumInput b = conal::read_spectrum_file(dist_files[1]);
        nlohmann::json j;
        bool infinite = false;
        if (metric == "riemannian") {
            j["value"] = conal::riemannian_distance(a, b, grid);
        } else if (metric == "frobenius") {
            j["value"] = conal::frobenius_divergence(a, b, grid);
        } else if (metric == "thompson" || metric == "hilbert") {
            conal::MetricPath path = path_name == "grid" ? conal::MetricPath::Grid
                                                         : conal::MetricPath::Rational;
            conal::DistanceResult r = metric == "thompson"
                                          ? conal::thompson_distance(a, b, path, grid)
                                          : conal::hilbert_distance(a, b, path, grid);
            j = conal::distance_result_to_json(r);
            infinite = !r.finite();
        } else {
            throw conal::InvalidInputError("unknown metric " + metric);
        }
        emit(j.dump(2), out_path);
        return infinite ? 2 : 0;
    }
    if (*fact) {
        conal::SpectrumInput phi = conal::read_spectrum_file(fact_file);
        conal::FactoredSpectrum w = [&] {
            if (const auto* s = std::get_if<conal::ScalarRationalSpectrum>(&phi)) {
                return conal::minimum_phase_factor_scalar(*s);
            }
            if (const auto* sys = std::get_if<conal::StateSpace>(&phi)) {
                return conal::minimum_phase_factor_matrix(*sys, tol);
            }
            throw conal::InvalidInputError("factorize: sampled spectra are not factorizable");
        }();
        emit(conal::state_space_to_json(w.to_state_space()).dump(2), out_path);
        return 0;
    }
    if (*norm) {
        conal::SpectrumInput in = conal::read_spectrum_file(norm_file);
        const auto* sys = std::get_if<conal::StateSpace>(&in);
        if (!sys) throw conal::InvalidInputError("norm: input must be a state-space system");
        nlohmann::json j;
        if (kind == "hinf") {
            j = conal::norm_result_to_json(conal::hinf_norm(*sys, tol));
        } else if (kind == "h2") {
            j["value"] = std::sqrt(conal::h2_norm_sq(*sys));
        } else {
            throw conal::InvalidInputError("unknown norm kind " + kind);
        }
        emit(j.dump(2), out_path);
        return 0;
    }
    if (*geo) {
        conal::SpectrumInput a = conal::read_spectrum_file(geo_files[0]);
        conal::SpectrumInput b = conal::read_spectrum_file(geo_files[1]);
        std::ostringstream csv;
        nlohmann::json points = nlohmann::json::array();
        conal::GeodesicSpec spec;
        if (geo_kind == "finsler") spec = conal::make_geodesic_spec(a, b, conal::MetricPath::Rational, grid);
        for (double tau : taus) {
            conal::SpectrumInput point;
            if (geo_kind == "finsler") {
                point = conal::finsler_geodesic(spec, tau, grid).spectrum;
            } else if (geo_kind == "riemannian") {
                point = conal::riemannian_geodesic(a, b, tau, grid);
            } else if (geo_kind == "hilbert") {
                point = conal::hilbert_geodesic(a, b, tau, grid);
            } else {
                throw conal::InvalidInputError("unknown geodesic kind " + geo_kind);
            }
            if (out_format == "csv") {
                csv << "# tau=" << tau << "\n"
                    << conal::sampled_spectrum_to_csv(conal::sample_spectrum(point, grid));
                continue;
            }
            nlohmann::json entry;
            entry["tau"] = tau;
            if (const auto* s = std::get_if<conal::ScalarRationalSpectrum>(&point)) {
                entry["spectrum"] = conal::scalar_spectrum_to_json(*s);
            } else if (const auto* w = std::get_if<conal::StateSpace>(&point)) {
                entry["factor"] = conal::state_space_to_json(*w);
            } else {
                entry["csv"] = conal::sampled_spectrum_to_csv(
                    std::get<conal::SampledSpectrum>(point));
            }
            points.push_back(std::move(entry));
        }
        emit(out_format == "csv" ? csv.str() : points.dump(2), out_path);
        return 0;
    }
    // morph
    mc.grid = grid;
    mc.seed = seed;
    mc.pitch_mode = pitch_mode == "geometric" ? conal::PitchMode::Geometric
                                              : conal::PitchMode::Linear;
    conal::AudioSignal wa = conal::read_wav(wav_files[0]);
    conal::AudioSignal wb = conal::read_wav(wav_files[1]);
    conal::MorphResult r = conal::morph(wa, wb, mc);
    if (out_path.empty()) throw conal::InvalidInputError("morph: --out WAV path required");
    conal::write_wav(out_path, r.audio);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const conal::InvalidInputError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const conal::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
