// Command-line front end. Exit status: 0 success, 1 failed check, 2 usage error.

#include "umbral/umbral.hpp"
#include "umbral/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace umbral;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename F>
auto as_usage(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

MomentSeq moments_arg(const std::string& spec) {
    return as_usage([&] { return parse_moment_spec(spec); });
}

struct Options {
    bool json = false;
    std::size_t global_n = 16;
    std::optional<std::size_t> positional_n;

    std::size_t N() const { return positional_n.value_or(global_n); }
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

void print_moments(const Options& o, const std::vector<Poly>& values) {
    if (o.json) {
        Json j = Json::array();
        for (const auto& v : values) j.push_back(to_json(v));
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::vector<std::string> parts;
    for (const auto& v : values) parts.push_back(v.str());
    std::cout << join(parts, ", ") << "\n";
}

void print_sequence(const Options& o, const PolySeq& seq) {
    if (o.json) {
        std::cout << to_json(seq).dump(2) << "\n";
    } else {
        std::cout << format_entries(seq.entries) << "\n";
    }
}

// "binomial:<spec>", "abel:<spec>", "rising:<spec>", "from-delta:<series>".
PolySeq build_sequence(Alphabet& alphabet, const std::string& text, std::size_t N) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw UsageError("sequence '" + text + "' must look like binomial:<spec>, abel:<spec>, rising:<spec> or from-delta:<series>");
    std::string kind = text.substr(0, colon);
    std::string arg = text.substr(colon + 1);
    if (kind == "from-delta") {
        DeltaSeries f = as_usage([&] { return DeltaSeries(parse_series(arg, N, SeriesVar::D)); });
        return sequence_from_delta(alphabet, f, N);
    }
    MomentSeq m = moments_arg(arg);
    if (kind == "binomial") return binomial_from_umbra(alphabet, alphabet.register_derived("g", m, Partition::base), N);
    if (kind == "abel") return abel_sequence(alphabet, alphabet.register_derived("a", m, Partition::base), N);
    if (kind == "rising") return rising_factorial_sequence(alphabet, alphabet.register_derived("m", m, Partition::base), N);
    throw UsageError("unknown sequence kind '" + kind + "'");
}

unsigned to_unsigned(const std::string& s) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size() || v < 0) throw std::invalid_argument(s);
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw UsageError("expected a non-negative integer, got '" + s + "'");
    }
}

int run_oracle(const Options& o, const std::vector<std::string>& args) {
    if (args.empty()) throw UsageError("oracle needs a kind: stirling1, stirling2, difference, forests, increasing");
    const std::string& kind = args[0];
    auto need = [&](std::size_t n) {
        if (args.size() != n + 1) throw UsageError("oracle " + kind + " takes " + std::to_string(n) + " arguments");
    };
    Integer value;
    if (kind == "stirling1" || kind == "stirling2") {
        need(2);
        unsigned n = to_unsigned(args[1]);
        unsigned k = to_unsigned(args[2]);
        if (k > n) throw UsageError("need k <= n");
        value = kind == "stirling1" ? oracle::stirling1(n, k) : oracle::stirling2(n, k);
    } else if (kind == "difference") {
        need(2);
        value = oracle::forward_difference_power(to_unsigned(args[1]), to_unsigned(args[2]));
    } else if (kind == "forests" || kind == "increasing") {
        need(3);
        oracle::ForestSpec spec;
        spec.n = to_unsigned(args[1]);
        spec.x = to_unsigned(args[2]);
        std::string list = args[3];
        if (!list.empty() && list.front() == '[' && list.back() == ']') list = list.substr(1, list.size() - 2);
        for (const auto& item : detail::split(list, ',')) spec.outdegree_colors.push_back(to_unsigned(item));
        try {
            value = kind == "forests" ? oracle::count_colored_forests(spec) : oracle::count_increasing_colored_forests(spec);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    } else {
        throw UsageError("unknown oracle kind '" + kind + "'");
    }
    if (o.json) {
        std::cout << Json{{"kind", kind}, {"value", value.get_str()}}.dump(2) << "\n";
    } else {
        std::cout << value.get_str() << "\n";
    }
    return 0;
}

int run_verify(const Options& o, const std::string& which) {
    std::vector<const verify::NamedSuite*> chosen;
    for (const auto& s : verify::suites())
        if (which == "all" || which == s.name) chosen.push_back(&s);
    if (chosen.empty()) {
        std::vector<std::string> names;
        for (const auto& s : verify::suites()) names.emplace_back(s.name);
        throw UsageError("unknown suite '" + which + "'; choose all, " + join(names, ", "));
    }
    std::size_t total = 0;
    std::size_t passed = 0;
    Json report = Json::array();
    for (const auto* s : chosen) {
        Json checks = Json::array();
        for (const auto& r : s->run()) {
            ++total;
            if (r.passed) ++passed;
            checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
            if (!o.json)
                std::cout << (r.passed ? "PASS " : "FAIL ") << s->name << ": " << r.name
                          << (r.passed ? "" : " (" + r.detail + ")") << "\n";
        }
        report.push_back({{"suite", s->name}, {"checks", checks}});
    }
    if (o.json) {
        std::cout << Json{{"suites", report}, {"passed", passed}, {"total", total}}.dump(2) << "\n";
    } else {
        std::cout << passed << "/" << total << " checks passed\n";
    }
    return passed == total ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"Umbral calculus engine: moments, dot products, sequences of binomial type"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Emit JSON instead of text");
    app.add_option("-N", o.global_n, "Truncation order (default 16)")->check(CLI::PositiveNumber);

    std::string spec;
    std::string spec2;
    std::string text;
    std::vector<std::string> umbra_bindings;
    std::vector<std::string> rest;
    std::string c_list;
    unsigned m = 1;

    auto add_n = [&](CLI::App* sub) { sub->add_option("N", o.positional_n, "Truncation order")->check(CLI::PositiveNumber); };

    auto* bern = app.add_subcommand("bernoulli", "Bernoulli numbers B_0..B_N from the inverse of the uniform umbra");
    add_n(bern);
    auto* moments = app.add_subcommand("moments", "Moments m_0..m_N of a moment spec");
    moments->add_option("spec", spec, "Moment spec")->required();
    add_n(moments);
    auto* ev = app.add_subcommand("eval", "Evaluate an umbral expression");
    ev->add_option("expr", text, "Expression, e.g. \"(2.a)^2\"")->required();
    ev->add_option("--umbra", umbra_bindings, "Bind an umbra: name=spec (repeatable)");
    auto* dotc = app.add_subcommand("dot", "Moments of the dot product of two umbrae");
    dotc->add_option("left", spec, "Moment spec of the left umbra")->required();
    dotc->add_option("right", spec2, "Moment spec of the right umbra")->required();
    add_n(dotc);

    std::map<std::string, CLI::App*> simple;
    for (const char* name : {"binomial", "abel", "rising", "appell"}) {
        auto* sub = app.add_subcommand(name, std::string("Sequence: ") + name);
        sub->add_option("spec", spec, "Moment spec")->required();
        add_n(sub);
        simple[name] = sub;
    }
    auto* sheffer = app.add_subcommand("sheffer", "Sheffer sequence p_n(x + b)");
    sheffer->add_option("base", text, "Base sequence, e.g. rising:const:1")->required();
    sheffer->add_option("spec", spec, "Moment spec of the shift umbra")->required();
    add_n(sheffer);
    auto* delta_of = app.add_subcommand("delta-of", "Delta operator of a sequence of binomial type");
    delta_of->add_option("base", text, "Sequence, e.g. abel:const:2")->required();
    add_n(delta_of);
    auto* from_delta = app.add_subcommand("from-delta", "Sequence of binomial type for a delta series in t");
    from_delta->add_option("series", text, "Series, e.g. exp(t)-1")->required();
    add_n(from_delta);
    auto* compose = app.add_subcommand("compose", "Umbral composition of two sequences");
    compose->add_option("a", text, "Outer sequence")->required();
    compose->add_option("b", spec, "Inner sequence")->required();
    add_n(compose);
    auto* blissard = app.add_subcommand("blissard", "Coefficients of (z/log(1+z))^m three ways");
    blissard->add_option("m", m, "Power m")->required()->check(CLI::PositiveNumber);
    add_n(blissard);
    auto* ks = app.add_subcommand("ksequence", "Multiplicative sequence K_m over symbols a_1, a_2, ...");
    ks->add_option("spec", spec, "Moment spec of the right umbra")->required();
    add_n(ks);
    ks->add_option("--c", c_list, "Parameters c_1,...,c_l of the general construction");
    auto* orc = app.add_subcommand("oracle", "Brute-force counts: stirling1|stirling2 n k, difference m n, forests|increasing n x m0,m1,...");
    orc->add_option("args", rest, "Kind and arguments")->required();
    auto* ver = app.add_subcommand("verify", "Run identity suites");
    ver->add_option("suite", text, "Suite name or all")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::size_t N = o.N();
    Alphabet alphabet;

    if (bern->parsed()) {
        print_moments(o, MomentSeq::bernoulli().moments(N));
    } else if (moments->parsed()) {
        print_moments(o, moments_arg(spec).moments(N));
    } else if (ev->parsed()) {
        for (const auto& binding : umbra_bindings) {
            auto eq = binding.find('=');
            if (eq == std::string::npos || eq == 0) throw UsageError("--umbra expects name=spec, got '" + binding + "'");
            as_usage([&] { return alphabet.register_umbra(binding.substr(0, eq), moments_arg(binding.substr(eq + 1))); });
        }
        UmbralPoly p = as_usage([&] { return parse_umbral_expression(text, alphabet); });
        Poly value = eval(alphabet, p);
        std::cout << (o.json ? to_json(value).dump(2) : value.str()) << "\n";
    } else if (dotc->parsed()) {
        UmbraId left = alphabet.register_umbra("p", moments_arg(spec));
        UmbraId right = alphabet.register_umbra("q", moments_arg(spec2));
        print_moments(o, alphabet.moments(dot(alphabet, UmbralPoly(left), UmbralPoly(right))).moments(N));
    } else if (simple["binomial"]->parsed()) {
        print_sequence(o, binomial_from_umbra(alphabet, alphabet.register_umbra("g", moments_arg(spec)), N));
    } else if (simple["abel"]->parsed()) {
        print_sequence(o, abel_sequence(alphabet, alphabet.register_umbra("a", moments_arg(spec)), N));
    } else if (simple["rising"]->parsed()) {
        print_sequence(o, rising_factorial_sequence(alphabet, alphabet.register_umbra("m", moments_arg(spec)), N));
    } else if (simple["appell"]->parsed()) {
        print_sequence(o, appell_from(alphabet, alphabet.register_umbra("a", moments_arg(spec)), N));
    } else if (sheffer->parsed()) {
        PolySeq base = build_sequence(alphabet, text, N);
        UmbraId beta = alphabet.register_umbra("b", moments_arg(spec));
        print_sequence(o, sheffer_from(alphabet, base, beta));
    } else if (delta_of->parsed()) {
        PolySeq base = build_sequence(alphabet, text, N);
        DeltaSeries f = delta_operator_of(base);
        std::cout << (o.json ? to_json(f.series()).dump(2) : f.series().str()) << "\n";
    } else if (from_delta->parsed()) {
        DeltaSeries f = as_usage([&] { return DeltaSeries(parse_series(text, N, SeriesVar::D)); });
        print_sequence(o, sequence_from_delta(alphabet, f, N));
    } else if (compose->parsed()) {
        PolySeq a = build_sequence(alphabet, text, N);
        PolySeq b = build_sequence(alphabet, spec, N);
        print_sequence(o, umbral_compose(alphabet, a, b));
    } else if (blissard->parsed()) {
        BlissardReport r = blissard_example(m, N);
        auto strs = [](const std::vector<Rational>& v) {
            Json j = Json::array();
            for (const auto& x : v) j.push_back(x.str());
            return j;
        };
        if (o.json) {
            std::cout << Json{{"m", m},
                              {"direct", strs(r.direct)},
                              {"umbral", strs(r.umbral)},
                              {"closed_form", strs(r.closed_form)},
                              {"methods_agreeing", r.methods_agreeing()}}
                             .dump(2)
                      << "\n";
        } else {
            for (std::size_t n = 0; n < r.direct.size(); ++n) std::cout << "P_" << n << " = " << r.direct[n].str() << "\n";
            if (!r.agree()) {
                for (const auto& [name, v] : {std::pair{"direct", &r.direct}, {"umbral", &r.umbral}, {"closed form", &r.closed_form}}) {
                    std::vector<std::string> parts;
                    for (const auto& x : *v) parts.push_back(x.str());
                    std::cout << name << ": " << join(parts, ", ") << "\n";
                }
            }
            std::cout << r.methods_agreeing() << "/3 methods agree\n";
        }
        return r.agree() ? 0 : 1;
    } else if (ks->parsed()) {
        UmbraId gamma = alphabet.register_umbra("g", moments_arg(spec));
        KSeq K = c_list.empty() ? as_usage([&] { return k_polynomials(alphabet, gamma, N); })
                                : general_multiplicative(as_usage([&] { return parse_rational_list(c_list); }), alphabet, gamma, N);
        std::cout << (o.json ? to_json(K).dump(2) : format_entries(K.entries)) << "\n";
    } else if (orc->parsed()) {
        return run_oracle(o, rest);
    } else if (ver->parsed()) {
        return run_verify(o, text);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
