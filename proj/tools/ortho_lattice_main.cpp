#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ortho/matrix_io.hpp"
#include "ortho/orthogonality.hpp"

namespace {

using nlohmann::json;

int thread_count_from_env() {
    const char* env = std::getenv("ORTHO_LATTICE_THREADS");
    if (!env) return 1;
    const int t = std::atoi(env);
    return t < 1 ? 1 : (t > 256 ? 256 : t);
}

ortho::MatrixFile read_instance(const std::string& path) {
    if (path == "-") return ortho::parse_matrix_file(std::cin);
    std::ifstream in(path);
    if (!in) throw ortho::ParseError("cannot open '" + path + "'");
    return ortho::parse_matrix_file(in);
}

void print_basis(std::ostream& out, const ortho::IntMatrix& B) {
    out << "basis:\n";
    for (int i = 0; i < B.rows(); ++i) {
        for (int j = 0; j < B.cols(); ++j) {
            if (j) out << ' ';
            out << B.at(i, j).get_str();
        }
        out << '\n';
    }
}

json basis_to_json(const ortho::IntMatrix& B) {
    json rows = json::array();
    for (int i = 0; i < B.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < B.cols(); ++j) row.push_back(B.at(i, j).get_si());
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_decide(const std::string& path, int q_override, bool as_json) {
    const ortho::MatrixFile f = read_instance(path);
    const int q = q_override ? q_override : f.q;
    const ortho::Verdict v = ortho::decide(f.basis, q, thread_count_from_env());
    if (as_json) {
        json out;
        out["verdict"] = v.orthogonal ? "ORTHOGONAL" : "NOT_ORTHOGONAL";
        out["q"] = q;
        out["n"] = f.n;
        if (v.orthogonal) {
            out["basis"] = basis_to_json(v.basis->basis);
            json comps = json::array();
            for (const auto& c : v.decomposition->components) {
                json jc;
                jc["kind"] = ortho::kind_name(c.kind, q);
                json coords = json::array();
                for (int x : c.coords) coords.push_back(x + 1);
                jc["coords"] = std::move(coords);
                comps.push_back(std::move(jc));
            }
            out["components"] = std::move(comps);
        }
        std::cout << out.dump(2) << '\n';
    } else if (v.orthogonal) {
        std::cout << "ORTHOGONAL\n";
        print_basis(std::cout, v.basis->basis);
        std::cout << "components:\n";
        for (const auto& c : v.decomposition->components) {
            std::cout << ortho::kind_name(c.kind, q);
            for (int x : c.coords) std::cout << ' ' << (x + 1);
            std::cout << '\n';
        }
    } else {
        std::cout << "NOT_ORTHOGONAL\n";
    }
    return v.orthogonal ? 0 : 1;
}

int cmd_gen(int q, int n, uint64_t seed, const std::string& kind) {
    ortho::InstanceKind ik = ortho::InstanceKind::Orthogonal;
    int rank = 0;
    if (kind == "orthogonal") {
        ik = ortho::InstanceKind::Orthogonal;
    } else if (kind.rfind("code:", 0) == 0) {
        ik = ortho::InstanceKind::RandomCode;
        const std::string digits = kind.substr(5);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw ortho::ParseError("kind must be 'orthogonal' or 'code:<k>'");
        rank = std::atoi(digits.c_str());
    } else {
        throw ortho::ParseError("kind must be 'orthogonal' or 'code:<k>'");
    }
    const ortho::IntMatrix B = ortho::gen_instance(q, n, seed, ik, rank);
    ortho::MatrixFile f;
    f.q = q;
    f.n = n;
    f.basis = B;
    std::cout << "# q=" << q << " n=" << n << " seed=" << seed << " kind=" << kind << '\n'
              << ortho::format_matrix_file(f);
    return 0;
}

int cmd_oracle(const std::string& path) {
    const ortho::MatrixFile f = read_instance(path);
    if (f.n > 8) throw ortho::TooLargeError("oracle limited to n <= 8");
    ortho::validate(f.basis, f.q);
    const auto basis = ortho::brute_force_orthogonal(f.basis, f.q);
    if (basis) {
        std::cout << "ORTHOGONAL\n";
        print_basis(std::cout, basis->basis);
        return 0;
    }
    std::cout << "NOT_ORTHOGONAL\n";
    return 1;
}

int cmd_cvp(const std::string& path) {
    const ortho::MatrixFile f = read_instance(path);
    if (!f.target) throw ortho::ParseError("cvp requires a target: line");
    const ortho::Verdict v = ortho::decide(f.basis, f.q, thread_count_from_env());
    std::vector<ortho::Int> closest;
    if (v.orthogonal) {
        closest = ortho::cvp_round(*v.basis, *f.target);
    } else if (f.n <= 6) {
        // canonical frame keeps the coefficient box honest
        closest = ortho::cvp_exhaustive(ortho::hnf(f.basis), *f.target);
    } else {
        throw ortho::TooLargeError("lattice is not orthogonal and n > 6");
    }
    std::cout << "closest:";
    for (const auto& x : closest) std::cout << ' ' << x.get_str();
    std::cout << "\ndist2: " << ortho::format_rational(ortho::distance2(closest, *f.target))
              << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthogonality decision for Construction-A lattices (q = 2, 3)"};
    app.require_subcommand(1);

    std::string decide_file;
    int decide_q = 0;
    bool decide_json = false;
    auto* decide = app.add_subcommand("decide", "decide orthogonality, print a basis if any");
    decide->add_option("file", decide_file, "instance file ('-' for stdin)")->required();
    decide->add_option("--q", decide_q, "override the header q")->check(CLI::IsMember({2, 3}));
    decide->add_flag("--json", decide_json, "machine-readable output");

    int gen_q = 2, gen_n = 4;
    uint64_t gen_seed = 0;
    std::string gen_kind = "orthogonal";
    auto* gen = app.add_subcommand("gen", "emit a deterministic seeded instance");
    gen->add_option("--q", gen_q, "field size")->required()->check(CLI::IsMember({2, 3}));
    gen->add_option("--n", gen_n, "dimension")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed, "seed")->required();
    gen->add_option("--kind", gen_kind, "orthogonal | code:<k>");

    std::string oracle_file;
    auto* oracle = app.add_subcommand("oracle", "brute-force orthogonal basis search (n <= 8)");
    oracle->add_option("file", oracle_file, "instance file ('-' for stdin)")->required();

    std::string cvp_file;
    auto* cvp = app.add_subcommand("cvp", "closest vector to the target: line");
    cvp->add_option("file", cvp_file, "instance file ('-' for stdin)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (decide->parsed()) return cmd_decide(decide_file, decide_q, decide_json);
        if (gen->parsed()) return cmd_gen(gen_q, gen_n, gen_seed, gen_kind);
        if (oracle->parsed()) return cmd_oracle(oracle_file);
        if (cvp->parsed()) return cmd_cvp(cvp_file);
    } catch (const ortho::Error& e) {
        std::cerr << "ortho_lattice: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
