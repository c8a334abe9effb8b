#include "spk/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>

#include "spk/action.hpp"
#include "spk/charpoly.hpp"
#include "spk/errors.hpp"
#include "spk/json_io.hpp"
#include "spk/knuth.hpp"
#include "spk/report.hpp"
#include "spk/tensor.hpp"

namespace spk::cli {

namespace {

using exact::BigRational;
using io::json;

long long ms_since(std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
}

std::string csv_quote(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

int emit_ssyt_list(const std::vector<shapes::Tableau>& tabs, const std::string& format,
                   std::ostream& out) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& t : tabs) arr.push_back(io::tableau_to_json(t));
        out << arr.dump(2) << "\n";
    } else if (format == "csv") {
        out << "index,tableau\n";
        for (size_t i = 0; i < tabs.size(); ++i)
            out << i + 1 << "," << csv_quote(shapes::to_string(tabs[i])) << "\n";
    } else {
        for (const auto& t : tabs) out << shapes::to_string(t) << "\n";
    }
    return 0;
}

int emit_charpoly(const exact::TruncatedPoly& p, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << io::charpoly_to_json(p).dump(2) << "\n";
    } else if (format == "csv") {
        out << "exponents,coefficient\n";
        const auto& t = p.terms();
        for (auto it = t.rbegin(); it != t.rend(); ++it) {
            std::string exps;
            for (size_t i = 0; i < it->first.size(); ++i)
                exps += (i ? "," : "") + std::to_string(it->first[i]);
            out << csv_quote(exps) << "," << csv_quote(exact::to_string(it->second)) << "\n";
        }
    } else {
        out << p.to_string() << "\n";
    }
    return 0;
}

int emit_normal_form(const plactic::NormalForm& nf, const std::string& format,
                     std::ostream& out) {
    if (format == "json") {
        out << json{{"sign", nf.sign}, {"tableau", io::tableau_to_json(nf.tableau)}}.dump(2)
            << "\n";
    } else {
        out << "sign " << (nf.sign > 0 ? "+1" : "-1") << "\n"
            << shapes::to_string(nf.tableau) << "\n";
    }
    return 0;
}

CheckResult schur_weyl_check(int m, int n, int r) {
    CheckResult com = hecke::verify_commutant(m, n, r);
    CheckResult gl = hecke::verify_gl_relations(m, n);
    CheckResult res;
    res.name = "schur-weyl(m=" + std::to_string(m) + ",n=" + std::to_string(n) +
               ",r=" + std::to_string(r) + ")";
    res.pass = com.pass && gl.pass;
    res.details = com.details + "; " + gl.details;
    return res;
}

struct VerifyParams {
    int m = 1, n = 1;
    int maxdeg = 6;
    int r = 3;
    BigRational q0;
    bool corrupt = false;
};

std::vector<CheckResult> run_battery(const std::string& which, const VerifyParams& p,
                                     std::vector<long long>* times = nullptr) {
    std::vector<CheckResult> out;
    auto timed = [&](auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        out.push_back(fn());
        if (times) times->push_back(ms_since(t0));
    };
    if (which == "schur-identity" || which == "all")
        timed([&] { return symfunc::schur_identity_check(p.m, p.maxdeg); });
    if (which == "hook-identity" || which == "all")
        timed([&] { return symfunc::hook_identity_check(p.m, p.n, p.maxdeg); });
    if (which == "ybe" || which == "all")
        timed([&] { return hecke::verify_ybe_hecke(p.m, p.n, p.corrupt); });
    if (which == "idempotent" || which == "all")
        timed([&] { return hecke::verify_idempotent(); });
    if (which == "gamma" || which == "all")
        timed([&] { return hecke::verify_gamma_span(p.m, p.n, p.q0); });
    if (which == "dimensions" || which == "all")
        timed([&] { return freealg::verify_decomposition(p.m, p.n, p.r, p.q0); });
    if (which == "schur-weyl" || which == "all")
        timed([&] { return schur_weyl_check(p.m, p.n, p.r); });
    if (which == "all")
        timed([&] { return plactic::verify_class_bijection(p.m, p.n, std::min(p.r, 3)); });
    return out;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic toolkit for the signed-alphabet plactic calculus"};
    app.require_subcommand(1);

    std::string shape_arg, format = "text", route = "ssyt", word_arg, left_arg, right_arg;
    std::string which, out_file, q_arg = "7/3";
    int m = 0, n = 0, length = 0, maxdeg = 6, rpar = 3;
    bool corrupt = false;

    auto add_mn = [&](CLI::App* cmd, bool required = true) {
        auto* om = cmd->add_option("--m", m, "number of unprimed letters");
        auto* on = cmd->add_option("--n", n, "number of primed letters");
        if (required) {
            om->required();
            on->required();
        }
    };
    auto add_format = [&](CLI::App* cmd, std::vector<std::string> allowed) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(allowed))
            ->capture_default_str();
    };

    auto* ssyt = app.add_subcommand("ssyt", "enumerate or count tableaux");
    ssyt->require_subcommand(1);
    auto* ssyt_list = ssyt->add_subcommand("list", "list tableaux of a shape");
    ssyt_list->add_option("--shape", shape_arg, "partition, e.g. 2,1")->required();
    add_mn(ssyt_list);
    add_format(ssyt_list, {"text", "json", "csv"});
    auto* ssyt_count = ssyt->add_subcommand("count", "count tableaux of a shape");
    ssyt_count->add_option("--shape", shape_arg, "partition, e.g. 2,1")->required();
    add_mn(ssyt_count);
    add_format(ssyt_count, {"text", "json", "csv"});

    auto* chr = app.add_subcommand("char", "character polynomials");
    chr->require_subcommand(1);
    auto* chr_schur = chr->add_subcommand("schur", "ordinary Schur polynomial");
    chr_schur->add_option("--shape", shape_arg, "partition")->required();
    chr_schur->add_option("--m", m, "number of variables")->required();
    add_format(chr_schur, {"text", "json", "csv"});
    auto* chr_hook = chr->add_subcommand("hook-schur", "signed-alphabet character");
    chr_hook->add_option("--shape", shape_arg, "partition")->required();
    add_mn(chr_hook);
    chr_hook->add_option("--route", route, "evaluation route")
        ->check(CLI::IsMember({"ssyt", "factorized"}))
        ->capture_default_str();
    add_format(chr_hook, {"text", "json", "csv"});

    auto* plc = app.add_subcommand("plactic", "signed plactic monoid operations");
    plc->require_subcommand(1);
    auto* plc_nf = plc->add_subcommand("normal-form", "straighten a word");
    plc_nf->add_option("--word", word_arg, "comma separated letters, e.g. 2,1,1'")->required();
    add_mn(plc_nf, false);
    add_format(plc_nf, {"text", "json"});
    auto* plc_prod = plc->add_subcommand("product", "multiply two classes");
    plc_prod->add_option("--left", left_arg, "tableau JSON")->required();
    plc_prod->add_option("--right", right_arg, "tableau JSON")->required();
    add_mn(plc_prod);
    add_format(plc_prod, {"text", "json"});
    auto* plc_cls = plc->add_subcommand("classes", "Knuth classes of a given length");
    add_mn(plc_cls);
    plc_cls->add_option("--length", length, "word length")->required();
    add_format(plc_cls, {"text", "json"});

    auto* ver = app.add_subcommand("verify", "run a verification battery");
    ver->add_option("check", which, "one of schur-identity, hook-identity, ybe, idempotent, "
                                    "gamma, dimensions, schur-weyl")
        ->required();
    add_mn(ver, false);
    ver->add_option("--max-degree", maxdeg, "truncation degree for identities")
        ->capture_default_str();
    ver->add_option("--q", q_arg, "rational evaluation point")->capture_default_str();
    ver->add_option("--r", rpar, "tensor degree bound")->capture_default_str();
    ver->add_flag("--corrupt-relations", corrupt)->group("");
    add_format(ver, {"text", "json"});

    auto* rep = app.add_subcommand("report", "run every check and write a JSON report");
    std::string rep_what;
    rep->add_option("scope", rep_what, "must be 'all'")->required();
    add_mn(rep);
    rep->add_option("--max-degree", maxdeg, "truncation degree for identities")
        ->capture_default_str();
    rep->add_option("--q", q_arg, "rational evaluation point")->capture_default_str();
    rep->add_option("--r", rpar, "tensor degree bound")->capture_default_str();
    rep->add_option("--out", out_file, "output file")->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (ssyt_list->parsed() || ssyt_count->parsed()) {
            shapes::Partition lam = shapes::parse_partition(shape_arg);
            auto tabs = shapes::enumerate_ssyt(lam, m, n);
            if (ssyt_list->parsed()) return emit_ssyt_list(tabs, format, out);
            if (format == "json") {
                json shape = json::array();
                for (long v : lam) shape.push_back(v);
                out << json{{"shape", shape}, {"m", m}, {"n", n}, {"count", tabs.size()}}.dump(2)
                    << "\n";
            } else if (format == "csv") {
                out << "shape,m,n,count\n"
                    << csv_quote(shapes::to_string(lam)) << "," << m << "," << n << ","
                    << tabs.size() << "\n";
            } else {
                out << tabs.size() << "\n";
            }
            return 0;
        }

        if (chr_schur->parsed()) {
            exact::TruncatedPoly p = symfunc::schur(shapes::parse_partition(shape_arg), m);
            return emit_charpoly(p, format, out);
        }
        if (chr_hook->parsed()) {
            shapes::Partition lam = shapes::parse_partition(shape_arg);
            exact::TruncatedPoly p = route == "factorized"
                                         ? symfunc::hook_schur_factorized(lam, m, n)
                                         : symfunc::hook_schur_ssyt(lam, m, n);
            return emit_charpoly(p, format, out);
        }

        if (plc_nf->parsed()) {
            shapes::Word w = shapes::parse_word(word_arg);
            if ((plc_nf->count("--m") || plc_nf->count("--n")) && !shapes::in_alphabet(w, m, n))
                throw ParseError("word leaves the (" + std::to_string(m) + "," +
                                 std::to_string(n) + ") alphabet");
            return emit_normal_form(plactic::normal_form(w), format, out);
        }
        if (plc_prod->parsed()) {
            shapes::Tableau a = io::tableau_from_json(json::parse(left_arg, nullptr, true));
            shapes::Tableau b = io::tableau_from_json(json::parse(right_arg, nullptr, true));
            return emit_normal_form(plactic::plactic_product(a, b, m, n), format, out);
        }
        if (plc_cls->parsed()) {
            plactic::ClassReport r = plactic::classify(m, n, length);
            if (format == "json") {
                json by = json::object();
                for (const auto& [sh, k] : r.by_shape) by[sh] = k;
                out << json{{"classes", r.classes},
                            {"byShape", by},
                            {"signConsistent", r.sign_consistent}}
                           .dump(2)
                    << "\n";
            } else {
                out << "classes " << r.classes << "\n";
                for (const auto& [sh, k] : r.by_shape) out << "shape " << sh << ": " << k << "\n";
                out << "signs consistent: " << (r.sign_consistent ? "yes" : "no") << "\n";
            }
            return r.bijection ? 0 : 1;
        }

        if (ver->parsed() || rep->parsed()) {
            VerifyParams p;
            p.m = m;
            p.n = n;
            p.maxdeg = maxdeg;
            p.r = rpar;
            p.q0 = exact::parse_rational(q_arg);
            p.corrupt = corrupt;
            if (ver->parsed() && !ver->count("--m")) p.m = 1;
            if (ver->parsed() && !ver->count("--n")) p.n = 1;

            static const std::vector<std::string> known{
                "schur-identity", "hook-identity", "ybe",       "idempotent",
                "gamma",          "dimensions",    "schur-weyl"};
            if (ver->parsed() &&
                std::find(known.begin(), known.end(), which) == known.end()) {
                err << "unknown check '" << which << "'\n";
                return 2;
            }
            if (rep->parsed() && rep_what != "all") {
                err << "report scope must be 'all'\n";
                return 2;
            }

            std::vector<long long> times;
            io::Report report;
            report.parameters = json{{"m", p.m},         {"n", p.n}, {"max_degree", p.maxdeg},
                                     {"q", exact::to_string(p.q0)}, {"r", p.r}};
            auto checks = run_battery(rep->parsed() ? "all" : which, p, &times);
            for (size_t i = 0; i < checks.size(); ++i) report.add(checks[i], times[i]);

            if (rep->parsed()) {
                std::ofstream f(out_file);
                if (!f) {
                    err << "cannot write " << out_file << "\n";
                    return 2;
                }
                f << report.to_json().dump(2) << "\n";
            }
            if (format == "json" && ver->parsed()) {
                out << report.to_json().dump(2) << "\n";
            } else {
                report.print_text(out);
            }
            return report.overall() ? 0 : 1;
        }
    } catch (const nlohmann::json::exception& e) {
        err << "bad JSON input: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    }
    err << "no command selected\n";
    return 2;
}

} // namespace spk::cli
