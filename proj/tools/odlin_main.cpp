#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "odlin/json_io.hpp"
#include "odlin/reductions.hpp"

using namespace odlin;

namespace {

constexpr int kExitSolvable = 0;
constexpr int kExitUnsolvable = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 3;
constexpr int kExitInput = 4;

int status_exit(SolveStatus s) {
    switch (s) {
        case SolveStatus::Solvable: return kExitSolvable;
        case SolveStatus::Unsolvable: return kExitUnsolvable;
        case SolveStatus::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

Domain parse_domain(const std::string& name) {
    if (name == "N") return Domain::N;
    if (name == "Z") return Domain::Z;
    if (name == "Q") return Domain::Q;
    if (name == "Qplus") return Domain::Qplus;
    throw input_error("unknown domain '" + name + "', expected N, Z, Q or Qplus");
}

RatVec parse_csv(const std::string& text) {
    std::vector<Rat> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(Rat::parse(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return RatVec(std::move(out));
}

// Candidate stacked columns for the histogram-word alphabet: nonnegative
// integer solutions of the homogeneous system and of every target-column
// system, entries up to the bound.
std::vector<RatVec> column_alphabet(const MatrixInstance& mi, long bound) {
    RatMat all(mi.dimension, 0);
    for (const auto& g : mi.generators) all = all.hcat(g);
    std::vector<RatVec> alphabet;
    for (auto& w :
         enumerate_n_solutions_bounded(LinSys(all, RatVec(mi.dimension)), bound).solutions)
        if (!w.is_zero()) alphabet.push_back(std::move(w));
    for (std::size_t i = 0; i < mi.target.cols(); ++i)
        for (auto& w :
             enumerate_n_solutions_bounded(LinSys(all, mi.target.col(i)), bound).solutions)
            alphabet.push_back(std::move(w));
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    return alphabet;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers for linear equations over ordered data vectors"};
    app.require_subcommand(1);

    std::string input, output, domain = "Q", left, right, witness_path;
    std::size_t col_bound = 8, m_bound = 4, slot_bound = 6;
    long entry_bound = 8, alphabet_bound = 4, col = -1;

    CLI::App* solve = app.add_subcommand("solve", "decide solvability over a domain");
    solve->add_option("--domain", domain, "N, Z, Q or Qplus")->required();
    solve->add_option("--input", input, "instance file")->required();
    solve->add_option("--col-bound", col_bound, "column bound for the N search");
    solve->add_option("--entry-bound", entry_bound, "entry bound for the N search");

    CLI::App* reduce = app.add_subcommand("reduce", "translate between instances and VAS");
    reduce->require_subcommand(1);
    CLI::App* from_vas = reduce->add_subcommand("from-vas", "VAS reachability to solvability");
    from_vas->add_option("--input", input, "VAS file")->required();
    from_vas->add_option("--output", output, "instance file to write")->required();
    CLI::App* to_vas = reduce->add_subcommand("to-vas", "solvability to VAS reachability");
    to_vas->add_option("--input", input, "instance file")->required();
    to_vas->add_option("--output", output, "VAS file to write")->required();
    to_vas->add_option("--alphabet-bound", alphabet_bound, "entry bound for column letters");

    CLI::App* hist = app.add_subcommand("hist", "histogram toolbox");
    std::string hist_action;
    hist->add_option("action", hist_action, "validate, decompose, profile or smear")
        ->required()
        ->check(CLI::IsMember({"validate", "decompose", "profile", "smear"}));
    hist->add_option("--input", input, "histogram file")->required();
    hist->add_option("--col", col, "column to smear");
    hist->add_option("--left", left, "left smear column, comma-separated");
    hist->add_option("--right", right, "right smear column, comma-separated");

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive reference oracle");
    oracle->add_option("--domain", domain, "N, Z, Q or Qplus")->required();
    oracle->add_option("--input", input, "instance file")->required();
    oracle->add_option("--m-bound", m_bound, "summand bound");
    oracle->add_option("--slot-bound", slot_bound, "slot bound");

    CLI::App* verify = app.add_subcommand("verify", "re-check a witness against an instance");
    verify->add_option("--input", input, "instance file")->required();
    verify->add_option("--witness", witness_path, "witness file")->required();
    verify->add_option("--domain", domain, "coefficient domain to enforce");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*solve) {
            MatrixInstance mi = instance_to_matrix_problem(parse_instance(read_file(input)));
            Verdict v;
            switch (parse_domain(domain)) {
                case Domain::N: v = solve_n_bounded(mi, col_bound, entry_bound); break;
                case Domain::Z: v = solve_z(mi); break;
                case Domain::Q: v = solve_q(mi); break;
                case Domain::Qplus: v = solve_qplus(mi); break;
            }
            std::cout << dump_verdict(v);
            return status_exit(v.status);
        }
        if (*from_vas) {
            Vas vas = parse_vas(read_file(input));
            if (!vas.final.is_zero()) vas = normalize_final_zero(vas);
            write_file(output, dump_instance(vas_to_instance(vas).instance));
            return kExitSolvable;
        }
        if (*to_vas) {
            MatrixInstance mi = instance_to_matrix_problem(parse_instance(read_file(input)));
            MultihistVas mhv = instance_to_vas(mi, column_alphabet(mi, alphabet_bound));
            write_file(output, dump_vas(mhv.vas));
            return kExitSolvable;
        }
        if (*hist) {
            RatMat m = parse_matrix_file(read_file(input));
            HistMode mode = m.is_integral() ? HistMode::Integer : HistMode::Rational;
            if (hist_action == "validate") {
                HistogramCheck chk = is_histogram(m, mode);
                std::cout << dump_hist_check(chk);
                return chk.ok ? kExitSolvable : kExitUnsolvable;
            }
            if (hist_action == "decompose") {
                std::cout << dump_decomposition(decompose(m));
                return kExitSolvable;
            }
            if (hist_action == "profile") {
                std::cout << dump_matrix_file(profile(m));
                return kExitSolvable;
            }
            if (col < 0) throw input_error("smear needs --col");
            std::cout << dump_matrix_file(
                smear(m, static_cast<std::size_t>(col), parse_csv(left), parse_csv(right)));
            return kExitSolvable;
        }
        if (*oracle) {
            MatrixInstance mi = instance_to_matrix_problem(parse_instance(read_file(input)));
            Verdict v = oracle_pproduct(mi, parse_domain(domain), m_bound, slot_bound);
            std::cout << dump_verdict(v);
            return status_exit(v.status);
        }
        if (*verify) {
            MatrixInstance mi = instance_to_matrix_problem(parse_instance(read_file(input)));
            Witness w = parse_witness(read_file(witness_path));
            std::string report;
            bool ok = verify_witness(mi, w, parse_domain(domain), &report);
            std::cout << dump_validity(ok, report);
            return ok ? kExitSolvable : kExitUnsolvable;
        }
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const budget_error& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitUnknown;
    }
    return kExitUsage;
}
