#pragma once

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bseries.hpp"
#include "errors.hpp"
#include "fertility.hpp"
#include "forests.hpp"
#include "hopf_lot.hpp"
#include "json_io.hpp"
#include "text.hpp"
#include "verify.hpp"

namespace hopfmi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

struct Settings {
    std::string alphabet = "a";
    std::string format = "text";
    std::string cache;
    std::string sort;
    std::uint64_t seed = 1;
};

class Session {
public:
    Session(const Settings& settings, std::ostream& out)
        : settings_(settings), alphabet_(Alphabet::parse(settings.alphabet)), style_(TextStyle::for_alphabet(alphabet_)),
          out_(out) {}

    const Alphabet& alphabet() const { return alphabet_; }

    Sort sort_of(const std::string& text) const {
        return settings_.sort.empty() ? detect_sort(text) : parse_sort(settings_.sort);
    }

    LotElement bags(const std::string& text) const {
        const Sort s = sort_of(text);
        if (s == Sort::Tree || s == Sort::Forest)
            throw SortError("expected a multi-index or bag expression, got " + std::string(sort_name(s)));
        return parse_lincomb<MonomialBag>(text, alphabet_);
    }

    LinComb<Forest> forests(const std::string& text) const {
        const Sort s = sort_of(text);
        if (s == Sort::MultiIndex || s == Sort::Bag)
            throw SortError("expected a tree or forest expression, got " + std::string(sort_name(s)));
        return parse_lincomb<Forest>(text, alphabet_);
    }

    MultiIndex single_monomial(const std::string& text) const {
        const auto x = bags(text);
        if (x.size() != 1 || x.begin()->second != 1 || x.begin()->first.size() != 1)
            throw SortError("expected a single monomial");
        return x.begin()->first[0];
    }

    Forest single_forest(const std::string& text) const {
        const auto x = forests(text);
        if (x.size() != 1 || x.begin()->second != 1) throw SortError("expected a single forest");
        return x.begin()->first;
    }

    template <class K>
    void emit(const LinComb<K>& x) {
        if (json()) out_ << to_json(x, style_).dump(2) << '\n';
        else out_ << format(x, style_) << '\n';
    }

    template <class L, class R>
    void emit(const Tensor2<L, R>& x) {
        if (json()) out_ << to_json(x, style_).dump(2) << '\n';
        else out_ << format(x, style_) << '\n';
    }

    template <class B>
    void emit_tensor(const TensorN<B>& x, std::size_t rank) {
        if (json()) out_ << to_json(x, rank, style_).dump(2) << '\n';
        else out_ << format(x, style_) << '\n';
    }

    template <class K>
    void emit_list(const std::vector<K>& items) {
        if (json()) {
            LinComb<K> all;
            for (const auto& k : items) all.add(k, 1);
            out_ << to_json(all, style_).dump(2) << '\n';
            return;
        }
        for (const auto& k : items) out_ << format(k, style_) << '\n';
    }

    void emit(const Json& doc, const std::string& text) {
        if (json()) out_ << doc.dump(2) << '\n';
        else out_ << text;
    }

    bool json() const { return settings_.format == "json"; }
    const TextStyle& style() const { return style_; }
    std::ostream& out() { return out_; }

private:
    const Settings& settings_;
    Alphabet alphabet_;
    TextStyle style_;
    std::ostream& out_;
};

inline int verify_command(Session& s, const std::string& identity, int degree, std::uint64_t seed, std::ostream& err) {
    std::vector<std::string> names;
    if (identity == "all") {
        for (const auto& suite : suites()) names.push_back(suite.name);
    } else {
        if (!is_suite_name(identity)) throw CLI::ValidationError("--identity", "unknown identity '" + identity + "'");
        names.push_back(identity);
    }
    VerifyOptions options;
    options.seed = seed;
    bool all_passed = true;
    Json reports = Json::array();
    std::ostringstream text;
    for (const auto& name : names) {
        const VerifyReport r = verify(name, degree, s.alphabet(), options);
        all_passed = all_passed && r.passed();
        err << name << ": " << std::fixed << std::setprecision(3) << r.elapsed.count() << " s\n";
        Json failures = Json::array();
        for (const auto& f : r.failures) failures.push_back(f);
        reports.push_back({{"identity", r.identity},
                           {"degree", r.degree},
                           {"alphabet", r.alphabet.to_string()},
                           {"cases", r.cases},
                           {"passed", r.passed()},
                           {"failures", std::move(failures)}});
        text << (r.passed() ? "PASS " : "FAIL ") << r.identity << "  degree " << r.degree << "  alphabet "
             << r.alphabet.to_string() << "  cases " << r.cases;
        if (!r.passed()) text << "  failures " << r.failures.size();
        text << '\n';
        constexpr std::size_t kShown = 5;
        for (std::size_t i = 0; i < std::min(kShown, r.failures.size()); ++i)
            text << "  counterexample: " << r.failures[i] << '\n';
    }
    s.emit(Json{{"reports", std::move(reports)}, {"passed", all_passed}}, text.str());
    return all_passed ? kExitOk : kExitVerifyFailed;
}

inline Json cuts_lot_json(const MultiIndex& k, const TextStyle& style) {
    Json cuts = Json::array();
    for (const auto& c : mi_admissible_cuts(k))
        cuts.push_back({{"multiplicity", to_string(c.multiplicity)},
                        {"pruned", format(c.bag, style)},
                        {"remainder", format(c.remainder, style)},
                        {"r", c.r}});
    return {{"sort", "cuts(multiindex)"}, {"monomial", format(k, style)}, {"cuts", std::move(cuts)}};
}

inline std::string cuts_lot_text(const MultiIndex& k, const TextStyle& style) {
    std::string out;
    for (const auto& c : mi_admissible_cuts(k)) {
        out += to_string(c.multiplicity) + "  " + format(c.bag, style) + "  |  " + format(c.remainder, style) +
               "  r=" + std::to_string(c.r) + "\n";
    }
    return out;
}

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics and timings to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in the Hopf algebras of decorated multi-indices and rooted forests", "hopfmi"};
    app.require_subcommand(1);
    Settings settings;
    if (const char* env = std::getenv("HOPFMI_CACHE")) settings.cache = env;
    app.add_option("--alphabet", settings.alphabet, "Comma-separated decoration alphabet")->capture_default_str();
    app.add_option("--format", settings.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--cache", settings.cache, "Fiber cache file (default: $HOPFMI_CACHE)");
    app.add_option("--sort", settings.sort, "Sort of expression arguments")
        ->check(CLI::IsMember({"multiindex", "bag", "tree", "forest"}));
    app.add_option("--seed", settings.seed, "Seed for randomized checks")->capture_default_str();

    std::string algebra = "lot", op = "gl", what = "trees", identity = "all", decoration, alpha_file, field;
    std::size_t order = 2;
    int degree = 0;
    std::vector<std::string> exprs;

    auto* coproduct = app.add_subcommand("coproduct", "Coproduct of an element");
    coproduct->add_option("--algebra", algebra)->check(CLI::IsMember({"lot", "bck"}))->capture_default_str();
    coproduct->add_option("--order", order, "Number of tensor legs")->check(CLI::Range(2, 8))->capture_default_str();
    coproduct->add_option("expr", exprs)->required()->expected(1);

    auto* product = app.add_subcommand("product", "Product of two elements");
    product->add_option("--op", op)->check(CLI::IsMember({"gl", "graft", "odot"}))->capture_default_str();
    product->add_option("exprs", exprs)->required()->expected(2);

    auto* embed = app.add_subcommand("embed", "Embedding of multi-indices into forests");
    embed->add_option("expr", exprs)->required()->expected(1);

    auto* phi_cmd = app.add_subcommand("phi", "Fertility map from forests to multi-indices");
    phi_cmd->add_option("expr", exprs)->required()->expected(1);

    auto* antipode = app.add_subcommand("antipode", "Antipode of the multi-index Hopf algebra");
    antipode->add_option("expr", exprs)->required()->expected(1);

    auto* lbar = app.add_subcommand("lbar", "Transpose of the mock-cocycle L^a");
    lbar->add_option("--decoration", decoration)->required();
    lbar->add_option("expr", exprs)->required()->expected(1);

    auto* cuts = app.add_subcommand("cuts", "Admissible cuts of a monomial or forest");
    cuts->add_option("--algebra", algebra)->check(CLI::IsMember({"lot", "bck"}))->capture_default_str();
    cuts->add_option("expr", exprs)->required()->expected(1);

    auto* enumerate = app.add_subcommand("enumerate", "Basis elements of a given degree");
    enumerate->add_option("--what", what)
        ->check(CLI::IsMember({"trees", "forests", "monomials", "bags"}))
        ->capture_default_str();
    enumerate->add_option("--degree", degree)->required()->check(CLI::Range(0, kDefaultDegreeBound));

    auto* bseries = app.add_subcommand("bseries", "Truncated multi-index B-series of a polynomial field");
    bseries->add_option("--alpha", alpha_file, "JSON coefficient file")->required()->check(CLI::ExistingFile);
    bseries->add_option("--field", field, "Vector fields, e.g. 'y^2' or 'a=y;b=1+y'")->required();
    bseries->add_option("--degree", degree)->required()->check(CLI::Range(0, kDefaultDegreeBound));

    auto* verify_cmd = app.add_subcommand("verify", "Run identity checks");
    verify_cmd->add_option("--identity", identity)->capture_default_str();
    verify_cmd->add_option("--degree", degree)->required()->check(CLI::Range(0, kDefaultDegreeBound));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Session s(settings, out);
        if (!settings.cache.empty() && std::filesystem::exists(settings.cache)) {
            const auto report = load_fiber_cache(settings.cache);
            if (!report.error.empty()) err << "cache: " << report.error << '\n';
            if (report.rejected > 0) err << "cache: rejected " << report.rejected << " invalid entries\n";
        }
        int status = kExitOk;
        if (coproduct->parsed()) {
            if (algebra == "lot") {
                const auto x = s.bags(exprs[0]);
                if (order == 2) s.emit(coproduct_lot(x));
                else s.emit_tensor(coproduct_lot(x, order), order);
            } else {
                const auto x = s.forests(exprs[0]);
                if (order == 2) s.emit(coproduct_bck(x));
                else s.emit_tensor(coproduct_bck(x, order), order);
            }
        } else if (product->parsed()) {
            const Sort sort = s.sort_of(exprs[0]);
            const bool monomials = sort == Sort::MultiIndex || sort == Sort::Bag;
            if (op == "graft") {
                if (monomials) {
                    const auto p = parse_lincomb<MultiIndex>(exprs[0], s.alphabet());
                    const auto q = parse_lincomb<MultiIndex>(exprs[1], s.alphabet());
                    s.emit(novikov(p, q));
                } else {
                    const auto p = parse_lincomb<Tree>(exprs[0], s.alphabet());
                    const auto q = parse_lincomb<Tree>(exprs[1], s.alphabet());
                    s.emit(graft(p, q));
                }
            } else if (monomials) {
                const auto x = s.bags(exprs[0]), y = s.bags(exprs[1]);
                s.emit(op == "gl" ? gl_bags(x, y) : odot(x, y));
            } else {
                const auto x = s.forests(exprs[0]), y = s.forests(exprs[1]);
                s.emit(op == "gl" ? gl_forest(x, y) : forest_product(x, y));
            }
        } else if (embed->parsed()) {
            s.emit(jmath(s.bags(exprs[0])));
        } else if (phi_cmd->parsed()) {
            s.emit(phi(s.forests(exprs[0])));
        } else if (antipode->parsed()) {
            s.emit(antipode_lot(s.bags(exprs[0])));
        } else if (lbar->parsed()) {
            const Decoration a(decoration);
            s.alphabet().require(a);
            s.emit(Lbar(s.bags(exprs[0]), a));
        } else if (cuts->parsed()) {
            if (algebra == "lot") {
                const MultiIndex k = s.single_monomial(exprs[0]);
                require_weight_minus_one(k, "cuts");
                s.emit(cuts_lot_json(k, s.style()), cuts_lot_text(k, s.style()));
            } else {
                const Forest u = s.single_forest(exprs[0]);
                Tensor2<Forest, Forest> grouped;
                for (const auto& c : bck_cuts(u)) grouped.add({c.pruning, c.trunk}, 1);
                s.emit(grouped);
            }
        } else if (enumerate->parsed()) {
            if (what == "trees") s.emit_list(enumerate_trees(degree, s.alphabet()));
            else if (what == "forests") s.emit_list(enumerate_forests(degree, s.alphabet()));
            else if (what == "monomials") s.emit_list(enumerate_monomials(degree, s.alphabet()));
            else s.emit_list(enumerate_bags(degree, s.alphabet()));
        } else if (bseries->parsed()) {
            std::ifstream in(alpha_file);
            Json doc;
            try {
                doc = Json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw SyntaxError(std::string("malformed coefficient file: ") + e.what(), 0);
            }
            const CoeffMap alpha = coeff_map_from_json(doc, s.alphabet());
            const FieldFamily f = parse_field_family(field, s.alphabet());
            const Poly p = bseries_truncated(alpha, f, degree);
            s.emit(to_json(p), p.to_string() + "\n");
        } else if (verify_cmd->parsed()) {
            status = verify_command(s, identity, degree, settings.seed, err);
        }
        if (!settings.cache.empty()) save_fiber_cache(settings.cache, s.alphabet());
        return status;
    } catch (const SyntaxError& e) {
        err << "syntax error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CLI::Error& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace hopfmi::cli
