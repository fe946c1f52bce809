#include "kdiff/io.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kdiff/kaehler.hpp"
#include "kdiff/verify.hpp"

namespace kdiff {

// --- polynomial parser --------------------------------------------------

namespace {

struct Token {
    enum Kind { Num, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    int var_index = 0;
    std::size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        Token t;
        t.pos = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            t.kind = Token::Num;
            t.text = s.substr(i, j - i);
            i = j;
        } else if (c == 'X' || c == 'x') {
            std::size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i + 1) throw SyntaxError("variable name needs an index", i);
            t.kind = Token::Var;
            t.text = s.substr(i, j - i);
            t.var_index = std::stoi(s.substr(i + 1, j - i - 1));
            i = j;
        } else {
            switch (c) {
                case '+': t.kind = Token::Plus; break;
                case '-': t.kind = Token::Minus; break;
                case '*': t.kind = Token::Star; break;
                case '/': t.kind = Token::Slash; break;
                case '^': t.kind = Token::Caret; break;
                case '(': t.kind = Token::LParen; break;
                case ')': t.kind = Token::RParen; break;
                default:
                    throw SyntaxError(std::string("unexpected character '") + c + "'", i);
            }
            t.text = std::string(1, c);
            ++i;
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::End;
    end.pos = s.size();
    out.push_back(end);
    return out;
}

class Parser {
public:
    Parser(const std::string& text, const Ring& ring)
        : ring_(ring), toks_(tokenize(text)) {}

    Polynomial run() {
        Polynomial f = parse_expr();
        expect(Token::End, "trailing input");
        return f;
    }

private:
    const Token& cur() const { return toks_[idx_]; }
    void advance() { ++idx_; }
    void expect(Token::Kind k, const std::string& what) {
        if (cur().kind != k) throw SyntaxError("expected " + what, cur().pos);
    }

    int slot_of(const Token& t) const {
        if (ring_.projective) {
            if (t.var_index > ring_.n()) throw UnknownVariable(t.text);
            return t.var_index;
        }
        if (t.var_index == 0)
            throw WrongRing("x0 does not exist in the affine ring");
        if (t.var_index > ring_.nvars) throw UnknownVariable(t.text);
        return t.var_index - 1;
    }

    Polynomial parse_expr() {
        bool neg = false;
        if (cur().kind == Token::Minus) { neg = true; advance(); }
        Polynomial acc = parse_term();
        if (neg) acc = -acc;
        while (cur().kind == Token::Plus || cur().kind == Token::Minus) {
            bool minus = cur().kind == Token::Minus;
            advance();
            Polynomial t = parse_term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial parse_term() {
        bool numeric = false;
        Polynomial acc = parse_factor(numeric);
        for (;;) {
            if (cur().kind == Token::Star) {
                advance();
                bool n2 = false;
                acc = acc * parse_factor(n2);
            } else if (cur().kind == Token::Var || cur().kind == Token::LParen ||
                       cur().kind == Token::Num) {
                if (!numeric)
                    throw SyntaxError("missing '*' between factors", cur().pos);
                bool n2 = false;
                acc = acc * parse_factor(n2);
                numeric = false;
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial parse_factor(bool& is_number) {
        Polynomial base = parse_atom(is_number);
        if (cur().kind == Token::Caret) {
            advance();
            expect(Token::Num, "an integer exponent");
            long long e = std::stoll(cur().text);
            advance();
            Polynomial acc = Polynomial::constant(ring_, ring_.field.one());
            for (long long i = 0; i < e; ++i) acc = acc * base;
            is_number = false;
            return acc;
        }
        return base;
    }

    Polynomial parse_atom(bool& is_number) {
        is_number = false;
        const Token& t = cur();
        switch (t.kind) {
            case Token::Num: {
                long long num = std::stoll(t.text);
                advance();
                if (cur().kind == Token::Slash) {
                    advance();
                    expect(Token::Num, "a denominator");
                    long long den = std::stoll(cur().text);
                    advance();
                    if (den == 0) throw SyntaxError("zero denominator", t.pos);
                    is_number = true;
                    return Polynomial::constant(ring_, ring_.field.from_ratio(num, den));
                }
                is_number = true;
                return Polynomial::constant(ring_, ring_.field.from_integer(num));
            }
            case Token::Var: {
                int slot = slot_of(t);
                advance();
                return Polynomial::variable(ring_, slot);
            }
            case Token::LParen: {
                advance();
                Polynomial inner = parse_expr();
                expect(Token::RParen, "')'");
                advance();
                return inner;
            }
            default:
                throw SyntaxError("expected a number, variable or '('", t.pos);
        }
    }

    const Ring& ring_;
    std::vector<Token> toks_;
    std::size_t idx_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Ring& ring) {
    return Parser(text, ring).run();
}

// --- scheme files ---------------------------------------------------------

namespace {

Field parse_field_tag(const nlohmann::json& j) {
    if (!j.is_string()) throw BadSchemeFile("'field' must be \"Q\" or \"F<p>\"");
    std::string s = j.get<std::string>();
    if (s == "Q") return Field::rationals();
    if (s.size() >= 2 && (s[0] == 'F' || s[0] == 'f')) {
        try {
            return Field::prime(std::stoll(s.substr(1)));
        } catch (const Error&) {
            throw BadSchemeFile("'" + s + "' is not a prime field tag");
        }
    }
    throw BadSchemeFile("unknown field tag '" + s + "'");
}

FieldElem parse_coord(const Field& field, const nlohmann::json& j) {
    if (j.is_number_integer()) return field.from_integer(j.get<long long>());
    if (j.is_string()) return field.from_string(j.get<std::string>());
    throw BadSchemeFile("coordinates must be integers or field literals");
}

}  // namespace

SchemeSpec parse_scheme_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw BadSchemeFile("top level must be an object");
    if (!doc.contains("format") || doc["format"] != 1)
        throw BadSchemeFile("missing or unsupported \"format\" (expected 1)");
    if (!doc.contains("field") || !doc.contains("n"))
        throw BadSchemeFile("\"field\" and \"n\" are required");

    SchemeSpec spec;
    spec.field = parse_field_tag(doc["field"]);
    spec.n = doc["n"].get<int>();
    if (spec.n < 1) throw BadSchemeFile("n must be >= 1");
    if (doc.contains("label")) spec.label = doc["label"].get<std::string>();

    Ring proj = projective_ring(spec.field, spec.n);

    bool has_points = doc.contains("points");
    bool has_ideal = doc.contains("ideal");
    if (has_points == has_ideal)
        throw BadSchemeFile("exactly one of \"points\" or \"ideal\" is required");

    if (has_ideal) {
        for (const auto& s : doc["ideal"]) {
            if (!s.is_string()) throw BadSchemeFile("ideal entries must be strings");
            spec.explicit_gens.push_back(parse_polynomial(s.get<std::string>(), proj));
        }
        if (spec.explicit_gens.empty()) throw BadSchemeFile("empty ideal list");
    } else {
        for (const auto& p : doc["points"]) {
            if (!p.is_object()) throw BadSchemeFile("point entries must be objects");
            if (p.contains("ideal")) {
                IdealComponent ic;
                for (const auto& s : p["ideal"])
                    ic.gens.push_back(parse_polynomial(s.get<std::string>(), proj));
                spec.components.push_back(std::move(ic));
                continue;
            }
            if (!p.contains("coords"))
                throw BadSchemeFile("point entry needs \"coords\" or \"ideal\"");
            PointComponent pc;
            for (const auto& c : p["coords"])
                pc.coords.push_back(parse_coord(spec.field, c));
            if (static_cast<int>(pc.coords.size()) != spec.n + 1)
                throw BadSchemeFile("coords must have n+1 entries");
            pc.mult = p.value("mult", 1);
            spec.components.push_back(std::move(pc));
        }
        if (spec.components.empty()) throw BadSchemeFile("empty point list");
    }

    if (doc.contains("local_profile")) {
        LocalRingProfile prof;
        for (const auto& e : doc["local_profile"]) {
            if (!e.is_array() || e.size() != 2)
                throw BadSchemeFile("local_profile entries are [kappa, nu] pairs");
            prof.entries.emplace_back(e[0].get<long long>(), e[1].get<long long>());
        }
        spec.profile = std::move(prof);
    }
    return spec;
}

SchemeSpec load_scheme_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadSchemeFile("cannot open '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw BadSchemeFile(std::string("invalid JSON: ") + e.what());
    }
    return parse_scheme_json(doc);
}

nlohmann::json scheme_to_json(const SchemeSpec& spec) {
    nlohmann::json doc;
    doc["format"] = 1;
    doc["field"] = spec.field.characteristic() == 0
                       ? std::string("Q")
                       : "F" + std::to_string(spec.field.characteristic());
    doc["n"] = spec.n;
    if (!spec.label.empty()) doc["label"] = spec.label;
    if (!spec.explicit_gens.empty()) {
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& g : spec.explicit_gens) gens.push_back(g.to_string());
        doc["ideal"] = gens;
    } else {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& comp : spec.components) {
            nlohmann::json e;
            if (const auto* pc = std::get_if<PointComponent>(&comp)) {
                nlohmann::json coords = nlohmann::json::array();
                for (const auto& c : pc->coords)
                    coords.push_back(spec.field.to_string(c));
                e["coords"] = coords;
                e["mult"] = pc->mult;
            } else {
                const auto& ic = std::get<IdealComponent>(comp);
                nlohmann::json gens = nlohmann::json::array();
                for (const auto& g : ic.gens) gens.push_back(g.to_string());
                e["ideal"] = gens;
            }
            pts.push_back(std::move(e));
        }
        doc["points"] = pts;
    }
    if (spec.profile) {
        nlohmann::json prof = nlohmann::json::array();
        for (auto [k, v] : spec.profile->entries)
            prof.push_back(nlohmann::json::array({k, v}));
        doc["local_profile"] = prof;
    }
    return doc;
}

nlohmann::json hilbert_to_json(const HilbertData& h) {
    return nlohmann::json{{"values", h.values}, {"hp", h.hp}, {"ri", h.ri}};
}

// --- result documents ----------------------------------------------------

nlohmann::json ResultDocument::to_json() const {
    nlohmann::json out = body;
    out["command"] = command;
    return out;
}

namespace {

std::string scalar_to_string(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render_entry(std::ostream& out, const std::string& key,
                  const nlohmann::json& v, int indent) {
    std::string pad(indent, ' ');
    if (v.is_object()) {
        out << pad << key << ":\n";
        for (const auto& [k2, v2] : v.items()) render_entry(out, k2, v2, indent + 2);
    } else if (v.is_array()) {
        out << pad << key << ":";
        for (const auto& e : v) out << " " << scalar_to_string(e);
        out << "\n";
    } else {
        out << pad << key << ": " << scalar_to_string(v) << "\n";
    }
}

}  // namespace

std::string ResultDocument::render_table() const {
    std::ostringstream out;
    out << "command: " << command << "\n";
    for (const auto& [k, v] : body.items()) render_entry(out, k, v, 0);
    return out.str();
}

// --- CLI -------------------------------------------------------------------

namespace {

struct CliState {
    bool json = false;
    int max_degree = 256;
};

void emit(const CliState& st, const ResultDocument& doc) {
    if (st.json)
        std::cout << doc.to_json().dump(2) << "\n";
    else
        std::cout << doc.render_table();
}

nlohmann::json scheme_summary(const SchemeCtx& ctx) {
    nlohmann::json s;
    if (!ctx.spec.label.empty()) s["label"] = ctx.spec.label;
    s["field"] = ctx.ring.field.characteristic() == 0
                     ? std::string("Q")
                     : "F" + std::to_string(ctx.ring.field.characteristic());
    s["n"] = ctx.ring.n();
    s["deg"] = ctx.deg;
    s["r"] = ctx.r;
    s["hf"] = hilbert_to_json(ctx.hf);
    return s;
}

int run_verify_preset(const CliState& st, const std::string& preset) {
    VerifyReport report;
    if (preset == "paper-examples") report = verify_paper_examples();
    else if (preset == "fatpoint-sweep") report = verify_fatpoint_sweep();
    else if (preset == "char-gates") report = verify_char_gates();
    else {
        std::cerr << "unknown sweep preset '" << preset << "'\n";
        return 2;
    }
    ResultDocument doc;
    doc.command = "verify --sweep " + preset;
    nlohmann::json checks = nlohmann::json::array();
    int failures = 0;
    for (const auto& line : report.lines) {
        nlohmann::json c;
        c["name"] = line.name;
        c["expected"] = line.expected;
        c["actual"] = line.actual;
        c["pass"] = line.pass;
        checks.push_back(std::move(c));
        if (!line.pass) ++failures;
    }
    doc.body["checks"] = checks;
    doc.body["total"] = static_cast<int>(report.lines.size());
    doc.body["failures"] = failures;
    if (st.json) {
        std::cout << doc.to_json().dump(2) << "\n";
    } else {
        for (const auto& line : report.lines)
            std::cout << (line.pass ? "PASS" : "FAIL") << "  " << line.name
                      << "  expected=" << line.expected << "  actual=" << line.actual
                      << "\n";
        std::cout << report.lines.size() << " checks, " << failures << " failures\n";
    }
    return failures == 0 ? 0 : 1;
}

std::string hf_pretty(const HilbertData& h) {
    std::ostringstream out;
    for (std::size_t i = 0; i < h.values.size(); ++i)
        out << (i ? " " : "") << h.values[i];
    return out.str();
}

}  // namespace

int cli_run(int argc, const char* const* argv) {
    CLI::App app{"Hilbert functions of Kaehler differential modules of "
                 "0-dimensional schemes"};
    app.require_subcommand(1);

    CliState st;
    app.add_flag("--json", st.json, "machine-readable JSON output");
    app.add_option("--max-degree", st.max_degree,
                   "safety cap for degree-by-degree loops");

    std::string file;
    int m = 1, d = 1, ui = 1, uj = 1, fn = 2, fk = 2;
    std::string field_tag = "Q", sweep;
    bool flag_torsion = false, flag_kernel = false, flag_koszul = false;
    bool flag_check = false;

    auto* scheme = app.add_subcommand("scheme", "scheme-level queries");
    auto* scheme_info = scheme->add_subcommand("info", "degree, regularity index, HF");
    scheme_info->add_option("file", file, "scheme JSON file")->required();

    auto* kaehler = app.add_subcommand("kaehler", "Kaehler differential modules");
    auto* khf = kaehler->add_subcommand("hf", "Hilbert function of Omega^m and friends");
    khf->add_option("file", file)->required();
    khf->add_option("--m", m, "form degree")->default_val(1);
    khf->add_flag("--torsion", flag_torsion, "torsion submodule of Omega^1");
    khf->add_flag("--euler-kernel", flag_kernel, "kernel of the Euler form");
    khf->add_flag("--koszul", flag_koszul, "Koszul submodule");

    auto* check = app.add_subcommand("check", "geometric property checks");
    auto* c_smooth = check->add_subcommand("smooth");
    c_smooth->add_option("file", file)->required();
    auto* c_curv = check->add_subcommand("curvilinear");
    c_curv->add_option("file", file)->required();
    auto* c_cbp = check->add_subcommand("cbp");
    c_cbp->add_option("file", file)->required();
    c_cbp->add_option("--d", d, "degree")->required();
    auto* c_unif = check->add_subcommand("uniform");
    c_unif->add_option("file", file)->required();
    c_unif->add_option("--i", ui, "colength")->required();
    c_unif->add_option("--j", uj, "degree")->required();

    auto* formula = app.add_subcommand("formula", "closed-form evaluators");
    auto* f_hp = formula->add_subcommand("hp", "HP(Omega^m) of a fat point scheme");
    f_hp->add_option("file", file)->required();
    f_hp->add_option("--m", m)->required();
    f_hp->add_flag("--check", flag_check, "cross-check against the symbolic engine");
    auto* f_local = formula->add_subcommand("local", "HF/dim of Omega^m at one fat point");
    f_local->add_option("--n", fn)->required();
    f_local->add_option("--k", fk)->required();
    f_local->add_option("--m", m)->required();
    f_local->add_option("--field", field_tag, "Q or F<p>");
    auto* f_delta = formula->add_subcommand("delta", "rank of the initial defining space");
    f_delta->add_option("--n", fn)->required();
    f_delta->add_option("--k", fk)->required();
    f_delta->add_option("--m", m)->required();
    f_delta->add_option("--field", field_tag, "Q or F<p>");

    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    verify->add_option("--sweep", sweep, "paper-examples | fatpoint-sweep | char-gates")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*scheme_info) {
            SchemeCtx ctx = compile(load_scheme_file(file), st.max_degree);
            ResultDocument doc;
            doc.command = "scheme info";
            doc.body["scheme"] = scheme_summary(ctx);
            emit(st, doc);
            return 0;
        }
        if (*khf) {
            int flags = int(flag_torsion) + int(flag_kernel) + int(flag_koszul);
            if (flags > 1) {
                std::cerr << "at most one of --torsion/--euler-kernel/--koszul\n";
                return 2;
            }
            if (flags == 1 && m != 1) {
                std::cerr << "submodule options apply to Omega^1 only (--m 1)\n";
                return 2;
            }
            SchemeCtx ctx = compile(load_scheme_file(file), st.max_degree);
            ResultDocument doc;
            doc.command = "kaehler hf";
            doc.body["scheme"] = scheme_summary(ctx);
            HilbertData h;
            std::string what;
            if (flag_torsion) { h = torsion_hilbert(ctx); what = "torsion_omega1"; }
            else if (flag_kernel) { h = euler_kernel_hilbert(ctx); what = "euler_kernel"; }
            else if (flag_koszul) { h = koszul_submodule_hilbert(ctx); what = "koszul_submodule"; }
            else { h = omega_hilbert(ctx, m); what = "omega" + std::to_string(m); }
            doc.body["module"] = what;
            doc.body["hilbert"] = hilbert_to_json(h);
            if (!st.json)
                doc.body["pretty"] = hf_pretty(h) + "  (hp " + std::to_string(h.hp) +
                                     ", ri " + std::to_string(h.ri) + ")";
            emit(st, doc);
            return 0;
        }
        if (*c_smooth || *c_curv || *c_cbp || *c_unif) {
            SchemeCtx ctx = compile(load_scheme_file(file), st.max_degree);
            ResultDocument doc;
            doc.body["scheme"] = scheme_summary(ctx);
            if (*c_smooth) {
                doc.command = "check smooth";
                SmoothEvidence ev = check_smooth(ctx);
                doc.body["smooth"] = ev.smooth;
                doc.body["evidence"] = {{"dim_omega1_s", ev.dim_omega1_s},
                                        {"hp_omega1", ev.hp_omega1},
                                        {"deg", ev.deg},
                                        {"hp_higher", ev.hp_higher}};
            } else if (*c_curv) {
                doc.command = "check curvilinear";
                CurvilinearEvidence ev = check_weakly_curvilinear(ctx);
                doc.body["verdict"] = to_string(ev.verdict);
                doc.body["evidence"] = {{"affine_dims", ev.affine_dims},
                                        {"hps", ev.hps},
                                        {"deg", ev.deg}};
            } else if (*c_cbp) {
                doc.command = "check cbp";
                CbpEvidence ev = check_cbp(ctx, d);
                doc.body["cbp"] = ev.holds;
                doc.body["d"] = d;
                doc.body["evidence"] = {{"min_alpha", ev.min_alpha},
                                        {"alphas", ev.alphas},
                                        {"differential_checked", ev.differential_checked}};
            } else {
                doc.command = "check uniform";
                UniformEvidence ev = check_uniform(ctx, ui, uj);
                doc.body["uniform"] = ev.holds;
                doc.body["i"] = ui;
                doc.body["j"] = uj;
                doc.body["evidence"] = {{"violations", ev.violations},
                                        {"differential_checked", ev.differential_checked}};
            }
            emit(st, doc);
            return 0;
        }
        if (*f_hp) {
            SchemeSpec spec = load_scheme_file(file);
            FatPointParams params;
            params.n = spec.n;
            params.characteristic = spec.field.characteristic();
            for (const auto& comp : spec.components) {
                const auto* pc = std::get_if<PointComponent>(&comp);
                if (!pc)
                    throw UnsupportedScheme("formula hp needs a fat point scheme file");
                params.mults.push_back(pc->mult);
            }
            if (!spec.from_points())
                throw UnsupportedScheme("formula hp needs a fat point scheme file");
            long long value = hp_omega_fatpoints(params, m);
            ResultDocument doc;
            doc.command = "formula hp";
            doc.body["m"] = m;
            doc.body["hp"] = value;
            if (flag_check) {
                SchemeCtx ctx = compile(spec, st.max_degree);
                long long engine = omega_hilbert(ctx, m).hp;
                doc.body["engine_hp"] = engine;
                doc.body["match"] = (engine == value);
            }
            emit(st, doc);
            return 0;
        }
        if (*f_local) {
            Field field = field_tag == "Q" ? Field::rationals()
                                           : Field::prime(std::stoll(field_tag.substr(1)));
            HilbertData h = hf_omega_local(fn, fk, m, field.characteristic());
            ResultDocument doc;
            doc.command = "formula local";
            doc.body["n"] = fn;
            doc.body["k"] = fk;
            doc.body["m"] = m;
            doc.body["hilbert"] = hilbert_to_json(h);
            doc.body["dim"] = dim_omega_local(fn, fk, m, field.characteristic());
            emit(st, doc);
            return 0;
        }
        if (*f_delta) {
            Field field = field_tag == "Q" ? Field::rationals()
                                           : Field::prime(std::stoll(field_tag.substr(1)));
            ResultDocument doc;
            doc.command = "formula delta";
            doc.body["n"] = fn;
            doc.body["k"] = fk;
            doc.body["m"] = m;
            doc.body["rank"] = delta_bruteforce(field, fn, fk, m);
            doc.body["char0_formula"] = delta_formula(fn, fk, m);
            emit(st, doc);
            return 0;
        }
        if (*verify) return run_verify_preset(st, sweep);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace kdiff
