// Command-line front end: thin adapters from the documented JSON schemas to
// the library calls, with canonical (sorted-key, integer-only) output.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toric/characteristic.hpp"
#include "toric/constructions.hpp"
#include "toric/errors.hpp"
#include "toric/homology.hpp"
#include "toric/json_io.hpp"
#include "toric/polytope.hpp"
#include "toric/simplicial_complex.hpp"
#include "toric/smith.hpp"
#include "toric/toric_cohomology.hpp"

using nlohmann::json;

namespace {

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw toric::IoError("cannot write '" + out_path + "'");
    out << j.dump(2) << "\n";
}

toric::SimplicialComplex load_complex(const std::string& path) {
    return toric::complex_from_json(toric::load_json_file(path));
}

toric::CharacteristicMatrix load_matrix(const std::string& path) {
    return toric::characteristic_matrix_from_json(toric::load_json_file(path));
}

std::vector<toric::CharacteristicMatrix> load_matrices(const std::vector<std::string>& paths) {
    std::vector<toric::CharacteristicMatrix> out;
    for (const std::string& p : paths) out.push_back(load_matrix(p));
    return out;
}

json regularity_to_json(const toric::RegularityReport& report) {
    json failures = json::array();
    for (const toric::RegularityFailure& f : report.failures)
        failures.push_back(json{{"face", f.face}, {"witness", f.witness}});
    return json{{"ok", report.ok}, {"failures", failures}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for simplicial wedges, composed complexes, characteristic\n"
                 "matrices and moment-angle Betti numbers"};
    app.require_subcommand(1);

    std::string complex_path, polytope_path, lambda_path, matrix_path, out_path, j_spec, ni_spec, mode = "all";
    std::vector<std::string> part_paths;
    int n_param = 0, m_param = 0, cap = toric::kDefaultHochsterVertexCap;
    bool serial = false;

    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", out_path, "Output file (default: stdout)"); };

    CLI::App* nerve = app.add_subcommand("nerve", "Nerve complex of a simple polytope");
    nerve->add_option("--polytope", polytope_path, "Polytope JSON")->required();
    add_out(nerve);

    CLI::App* wedge = app.add_subcommand("wedge", "Simplicial wedge K(J)");
    wedge->add_option("--complex", complex_path, "Complex JSON")->required();
    wedge->add_option("--j", j_spec, "J sequence, e.g. 1,2,3")->required();
    add_out(wedge);

    CLI::App* compose = app.add_subcommand("compose", "Composed complex K(K_1,...,K_m)");
    compose->add_option("--complex", complex_path, "Complex JSON")->required();
    compose->add_option("--part", part_paths, "Part complex JSON (repeat per vertex)")->required();
    add_out(compose);

    CLI::App* mnf = app.add_subcommand("mnf", "Minimal non-faces of a complex");
    mnf->add_option("--complex", complex_path, "Complex JSON")->required();
    add_out(mnf);

    CLI::App* charmat_j = app.add_subcommand("charmat-j", "Wedge characteristic matrix lambda(J)");
    charmat_j->add_option("--lambda", lambda_path, "Matrix JSON")->required();
    charmat_j->add_option("--j", j_spec, "J sequence")->required();
    add_out(charmat_j);

    CLI::App* charmat_jn = app.add_subcommand("charmat-jn", "Composed characteristic matrix lambda(J,N)");
    charmat_jn->add_option("--lambda", lambda_path, "Matrix JSON")->required();
    charmat_jn->add_option("--part", part_paths, "Part matrix JSON (repeat per column)")->required();
    add_out(charmat_jn);

    CLI::App* check = app.add_subcommand("check-regular", "Regularity check of a characteristic matrix");
    check->add_option("--complex", complex_path, "Complex JSON")->required();
    check->add_option("--lambda", lambda_path, "Matrix JSON")->required();
    check->add_option("--mode", mode, "all | vertices")->check(CLI::IsMember({"all", "vertices"}));
    check->add_flag("--serial", serial, "Use the serial reference sweep");
    add_out(check);

    CLI::App* kernel = app.add_subcommand("kernel", "Rank and saturated kernel lattice of a matrix");
    kernel->add_option("--matrix", matrix_path, "Matrix JSON")->required();
    add_out(kernel);

    CLI::App* q_test = app.add_subcommand("q-test", "Classify ker lambda(J,N) against Q = ⊕ ker lambda_i");
    q_test->add_option("--lambda", lambda_path, "Matrix JSON")->required();
    q_test->add_option("--part", part_paths, "Part matrix JSON (repeat per column)")->required();
    add_out(q_test);

    CLI::App* betti_toric = app.add_subcommand("betti-toric", "Even Betti numbers of the toric manifold over K");
    betti_toric->add_option("--complex", complex_path, "Complex JSON")->required();
    betti_toric->add_option("--n", n_param, "Dimension parameter n (K pure of dimension n-1)")->required();
    add_out(betti_toric);

    CLI::App* betti_zk = app.add_subcommand("betti-zk", "Moment-angle complex Betti numbers (Hochster sum)");
    betti_zk->add_option("--complex", complex_path, "Complex JSON")->required();
    betti_zk->add_option("--max-vertices", cap, "Vertex cap for the 2^m subset sum");
    betti_zk->add_flag("--serial", serial, "Use the serial reference sum");
    add_out(betti_zk);

    CLI::App* homology = app.add_subcommand("homology", "Reduced integral homology of a complex");
    homology->add_option("--complex", complex_path, "Complex JSON")->required();
    add_out(homology);

    CLI::App* presentation = app.add_subcommand("presentation", "Cohomology ring presentation");
    presentation->add_option("--complex", complex_path, "Complex JSON")->required();
    presentation->add_option("--lambda", lambda_path, "Matrix JSON")->required();
    add_out(presentation);

    CLI::App* transform = app.add_subcommand("transform", "Parameter transform (m,n,m-n) -> (d,n',coker)");
    transform->add_option("--m", m_param, "Number of vertices/facets m")->required();
    transform->add_option("--n", n_param, "Dimension n")->required();
    transform->add_option("--j", j_spec, "J sequence")->required();
    transform->add_option("--ni", ni_spec, "Part dimensions n_1,...,n_m (composed transform)");
    add_out(transform);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*nerve) {
            emit(toric::complex_to_json(
                     toric::nerve_of_simple_polytope(toric::polytope_from_json(toric::load_json_file(polytope_path)))),
                 out_path);
        } else if (*wedge) {
            emit(toric::complex_to_json(
                     toric::simplicial_wedge(load_complex(complex_path), toric::jsequence_from_string(j_spec))),
                 out_path);
        } else if (*compose) {
            std::vector<toric::SimplicialComplex> parts;
            for (const std::string& p : part_paths) parts.push_back(load_complex(p));
            emit(toric::complex_to_json(toric::composed_complex(load_complex(complex_path), parts)), out_path);
        } else if (*mnf) {
            toric::SimplicialComplex K = load_complex(complex_path);
            emit(json{{"vertices", K.vertex_labels()}, {"minimal_non_faces", toric::minimal_non_faces(K)}},
                 out_path);
        } else if (*charmat_j) {
            emit(toric::matrix_to_json(
                     toric::build_lambda_J(load_matrix(lambda_path), toric::jsequence_from_string(j_spec))),
                 out_path);
        } else if (*charmat_jn) {
            emit(toric::matrix_to_json(toric::build_lambda_JN(load_matrix(lambda_path), load_matrices(part_paths))),
                 out_path);
        } else if (*check) {
            toric::RegularityMode rmode =
                mode == "vertices" ? toric::RegularityMode::VerticesOnly : toric::RegularityMode::AllFaces;
            toric::SimplicialComplex K = load_complex(complex_path);
            toric::CharacteristicMatrix lam = load_matrix(lambda_path);
            toric::RegularityReport report =
                serial ? toric::check_regularity_serial(K, lam, rmode) : toric::check_regularity(K, lam, rmode);
            emit(regularity_to_json(report), out_path);
        } else if (*kernel) {
            json in = toric::load_json_file(matrix_path);
            toric::IntMatrix A = toric::int_matrix_from_json(in);
            toric::SNFResult snf = toric::smith_normal_form(A);
            json out{{"rank", snf.rank()}, {"kernel_basis", toric::kernel_basis(A).basis}, {"ambient", A.cols()}};
            if (in.contains("column_labels")) out["column_labels"] = in.at("column_labels");
            emit(out, out_path);
        } else if (*q_test) {
            toric::CharacteristicMatrix lam = load_matrix(lambda_path);
            std::vector<toric::CharacteristicMatrix> parts = load_matrices(part_paths);
            std::vector<int> widths;
            for (const toric::CharacteristicMatrix& p : parts) widths.push_back(p.cols());
            toric::JSequence J(widths);
            toric::CharacteristicMatrix lam_jn = toric::build_lambda_JN(lam, parts);
            toric::Lattice Q = toric::q_subgroup(parts, J);
            toric::KernelInQReport report = toric::kernel_in_q_report(lam_jn, Q);
            json vectors = json::array();
            for (std::size_t i = 0; i < report.kernel_vectors.size(); ++i)
                vectors.push_back(json{{"vector", report.kernel_vectors[i]},
                                       {"membership", toric::to_string(report.memberships[i])}});
            emit(json{{"rank", report.rank},
                      {"kernel_rank", report.kernel_rank},
                      {"q_rank", report.q_rank},
                      {"column_labels", lam_jn.column_labels},
                      {"vectors", vectors},
                      {"summary", toric::to_string(report.summary)}},
                 out_path);
        } else if (*betti_toric) {
            emit(toric::betti_to_json(toric::toric_betti(load_complex(complex_path), n_param)), out_path);
        } else if (*betti_zk) {
            toric::SimplicialComplex K = load_complex(complex_path);
            emit(toric::betti_to_json(serial ? toric::hochster_betti_serial(K, cap) : toric::hochster_betti(K, cap)),
                 out_path);
        } else if (*homology) {
            emit(toric::betti_to_json(toric::reduced_homology(load_complex(complex_path))), out_path);
        } else if (*presentation) {
            emit(toric::presentation_to_json(
                     toric::cohomology_presentation(load_complex(complex_path), load_matrix(lambda_path))),
                 out_path);
        } else if (*transform) {
            toric::JSequence J = toric::jsequence_from_string(j_spec);
            toric::ParamTransform t{};
            if (ni_spec.empty()) {
                t = toric::parameter_transform_wedge(m_param, n_param, J);
            } else {
                long long N = 0;
                std::size_t pos = 0;
                while (pos <= ni_spec.size()) {
                    std::size_t comma = ni_spec.find(',', pos);
                    std::string tok = ni_spec.substr(
                        pos, comma == std::string::npos ? std::string::npos : comma - pos);
                    try {
                        std::size_t used = 0;
                        int v = std::stoi(tok, &used);
                        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
                        N += v;
                    } catch (const std::exception&) {
                        throw toric::InputError("--ni must list nonnegative integers, got '" + tok + "'");
                    }
                    if (comma == std::string::npos) break;
                    pos = comma + 1;
                }
                t = toric::parameter_transform_composed(m_param, n_param, J, N);
            }
            emit(json{{"d", t.d_after}, {"n", t.n_after}, {"coker", t.coker_after}}, out_path);
        }
    } catch (const toric::Error& e) {
        std::cerr << json{{"error", {{"code", e.code()}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"code", "internal"}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    }
    return 0;
}
