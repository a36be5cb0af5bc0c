#include "poly/jsonio.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace poly;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& tok : split_commas(s)) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw UsageError("bad integer list: " + s);
        }
        if (pos != tok.size()) throw UsageError("bad integer list: " + s);
        out.push_back(v);
    }
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    for (const auto& tok : split_commas(s)) {
        try {
            out.push_back(parse_rational(tok));
        } catch (const std::exception&) {
            throw UsageError("bad rational list: " + s);
        }
    }
    return out;
}

Partition parse_partition_flag(const std::string& s) {
    std::vector<int> parts = parse_int_list(s);
    if (!is_partition_shape(parts)) throw UsageError("not a partition: " + s);
    return make_partition(std::move(parts));
}

BMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read matrix file: " + path);
    Json j = Json::parse(in);
    return matrix_from_json(j);
}

RingSpec make_spec(int k, int n, bool symbolic, const std::string& I_flag) {
    if (symbolic && !I_flag.empty()) throw UsageError("choose one of --symbolic or --I");
    if (symbolic) return RingSpec::symbolic(k, n);
    if (I_flag.empty()) throw UsageError("need --symbolic or --I with n values I_1..I_n");
    std::vector<Rational> I = parse_rational_list(I_flag);
    if (static_cast<int>(I.size()) != n)
        throw UsageError("--I needs exactly n values I_1..I_n");
    I.insert(I.begin(), Rational(1));
    return RingSpec::numeric(k, n, I);
}

int resolve_max_degree(const RingSpec& spec) {
    if (const char* env = std::getenv("POLY_MAX_DEGREE")) {
        std::string s(env);
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(s, &pos);
        } catch (const std::exception&) {
            throw UsageError("POLY_MAX_DEGREE is not an integer");
        }
        if (pos != s.size() || v < 0) throw UsageError("POLY_MAX_DEGREE is not a nonnegative integer");
        return v;
    }
    return spec.max_degree();
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string matrix_text(const BMatrix& B) {
    std::string out;
    for (const auto& row : B) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out += " ";
            out += to_string(row[j]);
        }
        out += "\n";
    }
    if (!out.empty()) out.pop_back();
    return out;
}

struct Output {
    Json j;
    std::string text;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology rings of Grassmannians with deformed tangent bundles"};
    app.require_subcommand(1);

    struct Flags {
        int k = 0, n = 0, r = 0, m = 0;
        unsigned seed = 1;
        bool pretty = false, symbolic = false;
        std::string lambda, mu, nu, s_star, q_star, I, matrix, eps;
    } f;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--pretty", f.pretty, "human-readable text instead of JSON");
        return sub;
    };

    auto* c_lr = add_common(app.add_subcommand("lr", "Littlewood-Richardson coefficient"));
    c_lr->add_option("--lambda", f.lambda, "partition, comma separated");
    c_lr->add_option("--mu", f.mu, "partition");
    c_lr->add_option("--nu", f.nu, "partition")->required();

    auto* c_mult = add_common(app.add_subcommand("mult", "Schur product in Lambda_k"));
    c_mult->add_option("--k", f.k, "row bound")->required();
    c_mult->add_option("--lambda", f.lambda, "partition");
    c_mult->add_option("--mu", f.mu, "partition");

    auto* c_giam = add_common(app.add_subcommand("giambelli", "Jacobi-Trudi determinant of one-row classes"));
    c_giam->add_option("--k", f.k, "row bound")->required();
    c_giam->add_option("--lambda", f.lambda, "partition");

    auto* c_bwb = add_common(app.add_subcommand("bwb", "cohomology of K_beta S* (x) K_gamma Q* on G(k,n)"));
    c_bwb->add_option("--k", f.k)->required();
    c_bwb->add_option("--n", f.n)->required();
    c_bwb->add_option("--s-star", f.s_star, "weight on S*, length k")->required();
    c_bwb->add_option("--q-star", f.q_star, "weight on Q*, length n-k")->required();

    auto* c_inv = add_common(app.add_subcommand("invariants", "characteristic invariants I_0..I_n of B"));
    c_inv->add_option("--matrix", f.matrix, "JSON matrix file")->required();

    auto* c_deg = add_common(app.add_subcommand("degenerate", "exterior-power degeneracy test"));
    c_deg->add_option("--matrix", f.matrix, "JSON matrix file")->required();
    c_deg->add_option("--k", f.k)->required();

    auto* c_et = add_common(app.add_subcommand("et", "epsilon transformation (1+k*eps)B + eps*I"));
    c_et->add_option("--matrix", f.matrix, "JSON matrix file")->required();
    c_et->add_option("--k", f.k)->required();
    c_et->add_option("--eps", f.eps, "rational epsilon")->required();

    auto* c_rel = add_common(app.add_subcommand("relation", "relation generator kappa_tilde(r)"));
    c_rel->add_option("--k", f.k)->required();
    c_rel->add_option("--n", f.n)->required();
    c_rel->add_option("--r", f.r)->required();
    c_rel->add_flag("--symbolic", f.symbolic, "keep I_1..I_n symbolic");
    c_rel->add_option("--I", f.I, "numeric I_1..I_n");

    auto* c_betti = add_common(app.add_subcommand("betti", "graded dimensions of the quotient ring"));
    c_betti->add_option("--k", f.k)->required();
    c_betti->add_option("--n", f.n)->required();
    c_betti->add_flag("--symbolic", f.symbolic);
    c_betti->add_option("--I", f.I, "numeric I_1..I_n");
    c_betti->add_option("--seed", f.seed, "seed for symbolic rank sampling");

    auto* c_nf = add_common(app.add_subcommand("nf", "normal form of kappa_lambda in the quotient"));
    c_nf->add_option("--k", f.k)->required();
    c_nf->add_option("--n", f.n)->required();
    c_nf->add_option("--I", f.I, "numeric I_1..I_n")->required();
    c_nf->add_option("--lambda", f.lambda, "partition");

    auto* c_rmult = add_common(app.add_subcommand("ringmult", "product followed by normal form"));
    c_rmult->add_option("--k", f.k)->required();
    c_rmult->add_option("--n", f.n)->required();
    c_rmult->add_option("--I", f.I, "numeric I_1..I_n")->required();
    c_rmult->add_option("--lambda", f.lambda, "partition");
    c_rmult->add_option("--mu", f.mu, "partition");

    auto* c_vloc = add_common(app.add_subcommand("vlocus", "linear dependence of the weight-m kappa_tilde_lambda set"));
    c_vloc->add_option("--k", f.k)->required();
    c_vloc->add_option("--n", f.n)->required();
    c_vloc->add_option("--m", f.m)->required();
    c_vloc->add_flag("--symbolic", f.symbolic);
    c_vloc->add_option("--I", f.I, "numeric I_1..I_n");

    auto* c_qmult = add_common(app.add_subcommand("qmult", "conjectural quantum product"));
    c_qmult->add_option("--k", f.k)->required();
    c_qmult->add_option("--n", f.n)->required();
    c_qmult->add_option("--I", f.I, "numeric I_1..I_n")->required();
    c_qmult->add_option("--lambda", f.lambda, "partition");
    c_qmult->add_option("--mu", f.mu, "partition");

    auto* c_beps = add_common(app.add_subcommand("check-beps", "B = eps*I binomial identity"));
    c_beps->add_option("--k", f.k)->required();
    c_beps->add_option("--n", f.n)->required();
    c_beps->add_option("--r", f.r)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }

    try {
        Output out;
        if (app.got_subcommand(c_lr)) {
            long c = lr_coeff(parse_partition_flag(f.lambda), parse_partition_flag(f.mu),
                              parse_partition_flag(f.nu));
            out = {Json{{"lr", c}}, std::to_string(c)};
        } else if (app.got_subcommand(c_mult)) {
            SchurClass x = SchurClass::kappa(parse_partition_flag(f.lambda), f.k) *
                           SchurClass::kappa(parse_partition_flag(f.mu), f.k);
            out = {to_json(x), x.str()};
        } else if (app.got_subcommand(c_giam)) {
            SchurClass x = giambelli(parse_partition_flag(f.lambda), f.k);
            out = {to_json(x), x.str()};
        } else if (app.got_subcommand(c_bwb)) {
            BwbResult r = bundle_cohomology(f.k, f.n, parse_int_list(f.s_star),
                                            parse_int_list(f.q_star));
            std::string text;
            if (r.vanishes)
                text = "vanishes";
            else
                text = "degree " + std::to_string(r.degree) + "\ndominant (" +
                       join_ints(r.dominant, ",") + ")\ndim " + r.dim.get_str();
            if (r.outside_standard_range) text += "\nwarning: k outside 1 < k < n-1";
            out = {to_json(r), text};
        } else if (app.got_subcommand(c_inv)) {
            Invariants I = char_invariants(load_matrix(f.matrix));
            std::string text = "I = (";
            for (size_t i = 0; i < I.size(); ++i) text += (i ? ", " : "") + to_string(I[i]);
            out = {invariants_to_json(I), text + ")"};
        } else if (app.got_subcommand(c_deg)) {
            DegeneracyResult r = is_degenerate(load_matrix(f.matrix), f.k);
            out = {to_json(r), std::string(r.degenerate ? "degenerate" : "nondegenerate") +
                                   ", det = " + to_string(r.determinant)};
        } else if (app.got_subcommand(c_et)) {
            BMatrix B = et_transform(load_matrix(f.matrix), f.k, parse_rational(f.eps));
            out = {matrix_to_json(B), matrix_text(B)};
        } else if (app.got_subcommand(c_rel)) {
            SchurClass x = kappa_tilde(make_spec(f.k, f.n, f.symbolic, f.I), f.r);
            out = {to_json(x), x.str()};
        } else if (app.got_subcommand(c_betti)) {
            RingSpec spec = make_spec(f.k, f.n, f.symbolic, f.I);
            std::vector<int> dims = betti_parallel(spec, resolve_max_degree(spec), f.seed);
            out = {Json{{"dims", dims}}, "dims: " + join_ints(dims, " ")};
        } else if (app.got_subcommand(c_nf)) {
            RingSpec spec = make_spec(f.k, f.n, false, f.I);
            SchurClass x =
                normal_form(spec, SchurClass::kappa(parse_partition_flag(f.lambda), f.k));
            out = {to_json(x), x.str()};
        } else if (app.got_subcommand(c_rmult)) {
            RingSpec spec = make_spec(f.k, f.n, false, f.I);
            SchurClass x = mult_mod(spec, SchurClass::kappa(parse_partition_flag(f.lambda), f.k),
                                    SchurClass::kappa(parse_partition_flag(f.mu), f.k));
            out = {to_json(x), x.str()};
        } else if (app.got_subcommand(c_vloc)) {
            VlocusResult r = vlocus_test(make_spec(f.k, f.n, f.symbolic, f.I), f.m);
            std::string text = std::to_string(r.nrows) + " classes in a basis of " +
                               std::to_string(r.ncols);
            if (r.dependent) text += *r.dependent ? ": dependent" : ": independent";
            for (const auto& mnr : r.witness_minors) text += "\nminor: " + mnr.str();
            out = {to_json(r), text};
        } else if (app.got_subcommand(c_qmult)) {
            RingSpec spec = make_spec(f.k, f.n, false, f.I);
            QuantumClass x = q_mult(spec, parse_partition_flag(f.lambda),
                                    parse_partition_flag(f.mu));
            out = {to_json(x), x.str() + "  [conjectural]"};
        } else if (app.got_subcommand(c_beps)) {
            bool holds = b_eps_identity_check(f.k, f.n, f.r);
            out = {Json{{"holds", holds}}, holds ? "holds" : "fails"};
        }
        std::cout << (f.pretty ? out.text : out.j.dump()) << "\n";
        return 0;
    } catch (const UsageError& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
}
