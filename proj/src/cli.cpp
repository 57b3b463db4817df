#include "supercohom/cli.hpp"

#include "supercohom/error.hpp"
#include "supercohom/extension.hpp"
#include "supercohom/nr_bracket.hpp"
#include "supercohom/workspace.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>

namespace supercohom {

namespace {

using Json = nlohmann::ordered_json;

std::string dims(const GradedBasis& b)
{
    return "(" + std::to_string(b.even_dim()) + "|" + std::to_string(b.odd_dim()) + ")";
}

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

/// Nonzero values of a cochain on canonical tuples, in tuple order.
Json cochain_values(const Cochain& f)
{
    const auto& sp = *f.space();
    Json out = Json::array();
    for (std::size_t t = 0; t < sp.tuples().size(); ++t) {
        const Vector v = f.value(t);
        if (v.is_zero())
            continue;
        Json row = Json::object();
        row["args"] = tuple_label(*sp.source(), sp.tuples()[t]);
        row["value"] = v.to_string(*sp.target());
        out.push_back(std::move(row));
    }
    return out;
}

/// Same, with a leading column naming the cochain.
void append_values(Json& rows, const std::string& column, const Json& tag, const Cochain& f)
{
    for (auto& v : cochain_values(f)) {
        Json row = Json::object();
        row[column] = tag;
        row["args"] = v["args"];
        row["value"] = v["value"];
        rows.push_back(std::move(row));
    }
}

std::string cell(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_boolean())
        return v.get<bool>() ? "yes" : "no";
    if (v.is_null())
        return "-";
    return v.dump();
}

void render_table(const Json& rows, std::ostream& os, std::size_t indent)
{
    std::vector<std::string> cols;
    for (const auto& r : rows)
        for (auto it = r.begin(); it != r.end(); ++it)
            if (std::find(cols.begin(), cols.end(), it.key()) == cols.end())
                cols.push_back(it.key());
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        width[c] = cols[c].size();
        for (const auto& r : rows)
            if (r.contains(cols[c]))
                width[c] = std::max(width[c], cell(r[cols[c]]).size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s(indent, ' ');
        for (std::size_t c = 0; c < cells.size(); ++c) {
            s += cells[c];
            if (c + 1 < cells.size())
                s += std::string(width[c] - cells[c].size() + 2, ' ');
        }
        os << s << '\n';
    };
    line(cols);
    for (const auto& r : rows) {
        std::vector<std::string> cells;
        for (const auto& c : cols)
            cells.push_back(r.contains(c) ? cell(r[c]) : "-");
        line(cells);
    }
}

void render_text(const Json& j, std::ostream& os, std::size_t indent = 0)
{
    const std::string pad(indent, ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json& v = it.value();
        if (v.is_object()) {
            os << pad << it.key() << ":\n";
            render_text(v, os, indent + 2);
        }
        else if (v.is_array() && v.empty()) {
            os << pad << it.key() << ": none\n";
        }
        else if (v.is_array() && v.front().is_object()) {
            os << pad << it.key() << ":\n";
            render_table(v, os, indent + 2);
        }
        else if (v.is_array()) {
            std::string s;
            for (const auto& e : v)
                s += (s.empty() ? "" : ", ") + cell(e);
            os << pad << it.key() << ": " << s << '\n';
        }
        else {
            os << pad << it.key() << ": " << cell(v) << '\n';
        }
    }
}

struct Outcome {
    Json report;
    int code = kPass;
};

Json header(const std::string& command, const std::string& file)
{
    Json r = Json::object();
    r["command"] = command;
    r["file"] = file;
    return r;
}

Outcome finish(Json r, bool ok)
{
    r["verdict"] = verdict(ok);
    return {std::move(r), ok ? kPass : kCheckFailed};
}

Outcome cmd_validate(const std::string& file)
{
    Json r = header("validate", file);
    Workspace w;
    try {
        w = load_workspace(file);
    }
    catch (const ValidationError& e) {
        r["axiom"] = e.axiom();
        r["witness"] = e.witness();
        return finish(std::move(r), false);
    }
    bool ok = true;
    r["field"] = w.field.to_string();
    Json alg = Json::object();
    alg["dimension"] = dims(*w.algebra->basis());
    const bool jacobi = validate_superalgebra(w.algebra->table()).ok();
    alg["super_jacobi"] = verdict(jacobi);
    ok = ok && jacobi;
    r["algebra"] = std::move(alg);
    Json grp = Json::object();
    grp["order"] = w.action->group().order();
    grp["elements"] = w.action->group().names();
    const bool act = validate_action(*w.action, *w.algebra).ok();
    grp["action"] = verdict(act);
    ok = ok && act;
    r["group"] = std::move(grp);

    Json modules = Json::array();
    for (const auto& name : w.module_names()) {
        const auto& cx = w.complex(name);
        const bool mod = validate_module(cx.algebra(), cx.module().table()).ok();
        const bool gact =
            validate_module_action(cx.action_on_algebra(), cx.action_on_module(), cx.module()).ok();
        Json row = Json::object();
        row["name"] = name;
        row["dimension"] = dims(*cx.module().space());
        row["module_axiom"] = verdict(mod);
        row["group_action"] = verdict(gact);
        ok = ok && mod && gact;
        modules.push_back(std::move(row));
    }
    r["modules"] = std::move(modules);

    Json cochains = Json::array();
    for (const auto& [name, c] : w.cochains) {
        const auto& cx = w.complex(c.module);
        Json row = Json::object();
        row["name"] = name;
        row["module"] = c.module;
        row["arity"] = c.cochain.arity();
        row["parity"] = c.cochain.parity();
        row["equivariant"] = cx.is_equivariant(c.cochain);
        row["cocycle"] = cx.coboundary(c.cochain).is_zero();
        cochains.push_back(std::move(row));
    }
    r["cochains"] = std::move(cochains);

    Json defs = Json::array();
    for (const auto& [name, terms] : w.deformations) {
        Json row = Json::object();
        row["name"] = name;
        row["order"] = terms.size();
        std::string joined;
        for (const auto& t : terms)
            joined += (joined.empty() ? "" : " ") + t;
        row["terms"] = joined;
        try {
            w.deformation(name);
            row["terms_valid"] = verdict(true);
        }
        catch (const ValidationError& e) {
            row["terms_valid"] = verdict(false);
            row["reason"] = e.what();
            ok = false;
        }
        defs.push_back(std::move(row));
    }
    r["deformations"] = std::move(defs);

    Json cands = Json::array();
    for (const auto& [name, t] : w.candidates) {
        Json row = Json::object();
        row["name"] = name;
        row["super_jacobi"] = validate_superalgebra(t).ok();
        cands.push_back(std::move(row));
    }
    r["candidates"] = std::move(cands);
    return finish(std::move(r), ok);
}

Outcome cmd_cohomology(const std::string& file, std::size_t n, const std::string& module)
{
    const Workspace w = load_workspace(file);
    const auto& cx = w.complex(module);
    Json r = header("cohomology", file);
    r["module"] = module;
    r["n"] = n;
    r["group_order"] = w.action->group().order();
    const auto rep = cx.cohomology(n);
    Json table = Json::array();
    for (int p = 0; p < 2; ++p) {
        Json row = Json::object();
        row["parity"] = p;
        row["C"] = rep.cochains[p];
        row["Z"] = rep.cocycles[p];
        row["B"] = rep.coboundaries[p];
        row["H"] = rep.cohomology[p];
        table.push_back(std::move(row));
    }
    r["dimensions"] = std::move(table);
    bool ok = true;
    if (n == 0) {
        const std::size_t ann = annihilator(cx).cols();
        Json check = Json::object();
        check["annihilator_dim"] = ann;
        check["agrees"] = ann == rep.cohomology[0];
        ok = ann == rep.cohomology[0];
        r["cross_check"] = std::move(check);
    }
    else if (n == 1) {
        const auto der = derivations(cx);
        const std::size_t outer = der.derivations.cols() - der.inner.cols();
        Json check = Json::object();
        check["derivations_dim"] = der.derivations.cols();
        check["inner_dim"] = der.inner.cols();
        check["agrees"] = outer == rep.cohomology[0];
        ok = outer == rep.cohomology[0];
        r["cross_check"] = std::move(check);
    }
    return finish(std::move(r), ok);
}

Outcome cmd_mc_check(const std::string& file, const std::string& candidate)
{
    const Workspace w = load_workspace(file);
    const StructureTable& t = candidate.empty() ? w.algebra->table() : w.candidate(candidate);
    Json r = header("mc-check", file);
    r["candidate"] = candidate.empty() ? "bracket of the algebra" : candidate;
    const NRElement f0 = table_to_element(t);
    const bool eq = is_equivariant(f0, *w.action);
    r["equivariant"] = eq;
    if (!eq)
        return finish(std::move(r), false);
    const MCReport mc = mc_check(f0, w.action.get());
    r["maurer_cartan"] = mc.is_mc;
    r["super_jacobi"] = mc.jacobi_ok;
    r["residual"] = cochain_values(mc.residual.cochain());
    return finish(std::move(r), mc.is_mc);
}

Outcome cmd_deform_check(const std::string& file, const std::string& name, bool strict)
{
    const Workspace w = load_workspace(file);
    const Deformation d = w.deformation(name);
    const auto mode = strict ? DeformationMode::Strict : DeformationMode::Truncated;
    const auto rep = validate(d, mode);
    Json r = header("deform check", file);
    r["deformation"] = name;
    r["mode"] = to_string(mode);
    r["order"] = d.order();
    r["antisymmetry"] = rep.antisymmetry_ok;
    r["equivariance"] = rep.equivariance_ok;
    Json orders = Json::array();
    Json residuals = Json::array();
    for (const auto& o : rep.orders) {
        Json row = Json::object();
        row["r"] = o.r;
        row["identity"] = verdict(o.ok);
        row["nonzero_values"] = cochain_values(o.residual).size();
        orders.push_back(std::move(row));
        append_values(residuals, "r", o.r, o.residual);
    }
    r["orders"] = std::move(orders);
    r["residuals"] = std::move(residuals);
    return finish(std::move(r), rep.ok());
}

Outcome cmd_deform_obstruct(const std::string& file, const std::string& name)
{
    const Workspace w = load_workspace(file);
    const Deformation d = w.deformation(name);
    Json r = header("deform obstruct", file);
    r["deformation"] = name;
    r["order"] = d.order();
    try {
        const auto ob = obstruction(d);
        r["obstruction"] = cochain_values(ob.obstruction);
        r["obstruction_cocycle"] = d.complex()->coboundary(ob.obstruction).is_zero();
        r["extendable"] = ob.extendable;
        r["next_term"] = ob.next_term ? cochain_values(*ob.next_term) : Json::array();
        return finish(std::move(r), ob.extendable);
    }
    catch (const NotValidated& e) {
        r["not_validated"] = e.what();
        return finish(std::move(r), false);
    }
}

Outcome cmd_derivations(const std::string& file, const std::string& module)
{
    const Workspace w = load_workspace(file);
    const auto& cx = w.complex(module);
    const auto der = derivations(cx);
    const auto h1 = cx.cohomology(1);
    Json r = header("derivations", file);
    r["module"] = module;
    r["derivations_dim"] = der.derivations.cols();
    r["inner_dim"] = der.inner.cols();
    r["outer_dim"] = der.derivations.cols() - der.inner.cols();
    r["H1_even_dim"] = h1.cohomology[0];
    Json basis = Json::array();
    for (std::size_t c = 0; c < der.derivations.cols(); ++c)
        append_values(basis, "derivation", c + 1,
                      Cochain(cx.space(1), 0, cx.field(), der.derivations.column(c)));
    r["basis"] = std::move(basis);
    return finish(std::move(r), der.derivations.cols() - der.inner.cols() == h1.cohomology[0]);
}

Outcome cmd_extend(const std::string& file, const std::string& cocycle)
{
    const Workspace w = load_workspace(file);
    const NamedCochain& nc = w.cochain(cocycle);
    if (nc.cochain.arity() != 2)
        throw PreconditionError("cochain '" + cocycle + "' is not a 2-cochain");
    const ExtensionDatum x{w.complexes.at(nc.module), nc.cochain};
    const Extension e = build_extension(x);
    const auto jc = jacobi_iff_cocycle(x);
    Json r = header("extend", file);
    r["cocycle"] = cocycle;
    r["module"] = nc.module;
    r["is_cocycle"] = jc.is_cocycle;
    r["super_jacobi"] = jc.jacobi;
    const auto& b = *e.table.left;
    r["dimension"] = dims(b);
    Json names = Json::array();
    for (std::size_t i = 0; i < b.dim(); ++i)
        names.push_back(b.name(i));
    r["basis"] = std::move(names);
    if (jc.jacobi) {
        const auto s = extension_structure(x, e);
        Json st = Json::object();
        st["module_abelian"] = s.m_abelian;
        st["module_ideal"] = s.m_ideal;
        st["projection_homomorphism"] = s.projection_homomorphism;
        r["structure"] = std::move(st);
    }
    Json brackets = Json::array();
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = i; j < b.dim(); ++j)
            if (!e.table(i, j).is_zero()) {
                Json row = Json::object();
                row["pair"] = tuple_label(b, {i, j});
                row["value"] = e.table(i, j).to_string(b);
                brackets.push_back(std::move(row));
            }
    r["brackets"] = std::move(brackets);
    return finish(std::move(r), jc.is_cocycle && jc.jacobi);
}

Outcome cmd_extend_classify(const std::string& file, std::string module)
{
    const Workspace w = load_workspace(file);
    if (module.empty()) {
        const auto names = w.module_names();
        module = names.empty() ? kAdjoint : names.front();
    }
    const auto& cx = w.complex(module);
    const auto h2 = cx.cohomology(2);
    const auto reps = classify_extensions(cx);
    Json r = header("extend classify", file);
    r["module"] = module;
    r["H2_even_dim"] = h2.cohomology[0];
    r["classes"] = reps.size() + 1;
    std::vector<Cochain> all{cx.zero(2, 0)};
    all.insert(all.end(), reps.begin(), reps.end());
    bool distinct = true;
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b)
            distinct = distinct && !extensions_equivalent(cx, all[a], all[b]);
    r["pairwise_inequivalent"] = distinct;
    Json values = Json::array();
    for (std::size_t k = 0; k < reps.size(); ++k)
        append_values(values, "class", k + 1, reps[k]);
    r["representatives"] = std::move(values);
    return finish(std::move(r), distinct && reps.size() == h2.cohomology[0]);
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cohomology, deformations and extensions of Lie superalgebras with a finite group "
                 "action"};
    app.name("supercohom");
    app.require_subcommand(1);
    app.fallthrough();
    std::string emit = "text";
    app.add_option("--emit", emit, "Report format")->check(CLI::IsMember({"text", "json"}));

    std::string file, module, name, candidate, cocycle;
    std::size_t n = 0;
    bool strict = false;

    auto* validate_cmd = app.add_subcommand("validate", "Parse and validate a workspace");
    validate_cmd->add_option("FILE", file)->required();

    auto* coh = app.add_subcommand("cohomology", "Dimensions of Z, B and H in degree n");
    coh->add_option("FILE", file)->required();
    coh->add_option("--n", n, "Cochain degree")->required();
    coh->add_option("--module", module, "Coefficient module (default: adjoint)");

    auto* mc = app.add_subcommand("mc-check", "Maurer-Cartan check of a bracket");
    mc->add_option("FILE", file)->required();
    mc->add_option("--candidate", candidate, "Candidate bracket (default: the algebra's)");

    auto* deform = app.add_subcommand("deform", "Formal deformations");
    deform->require_subcommand(1);
    auto* check = deform->add_subcommand("check", "Check the order identities");
    check->add_option("FILE", file)->required();
    check->add_option("--deformation", name)->required();
    check->add_flag("--strict", strict, "Check orders up to 2N");
    auto* obstruct = deform->add_subcommand("obstruct", "Obstruction to the next order");
    obstruct->add_option("FILE", file)->required();
    obstruct->add_option("--deformation", name)->required();

    auto* der = app.add_subcommand("derivations", "Equivariant even derivations");
    der->add_option("FILE", file)->required();
    der->add_option("--module", module, "Target module (default: adjoint)");

    auto* extend = app.add_subcommand("extend", "Abelian extensions");
    extend->require_subcommand(0, 1);
    extend->add_option("FILE", file);
    extend->add_option("--cocycle", cocycle, "2-cochain defining the extension");
    auto* classify = extend->add_subcommand("classify", "One extension per class of (H^2_G)_0");
    classify->add_option("FILE", file)->required();
    classify->add_option("--module", module, "Module (default: the first declared one)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kInputError;
    }

    Outcome result;
    try {
        if (validate_cmd->parsed())
            result = cmd_validate(file);
        else if (coh->parsed())
            result = cmd_cohomology(file, n, module.empty() ? kAdjoint : module);
        else if (mc->parsed())
            result = cmd_mc_check(file, candidate);
        else if (check->parsed())
            result = cmd_deform_check(file, name, strict);
        else if (obstruct->parsed())
            result = cmd_deform_obstruct(file, name);
        else if (der->parsed())
            result = cmd_derivations(file, module.empty() ? kAdjoint : module);
        else if (classify->parsed())
            result = cmd_extend_classify(file, module);
        else if (extend->parsed()) {
            if (file.empty() || cocycle.empty()) {
                err << "error: extend needs FILE and --cocycle NAME, or the classify subcommand\n";
                return kInputError;
            }
            result = cmd_extend(file, cocycle);
        }
    }
    catch (const OracleDisagreement& e) {
        err << "error: independent computations disagree: " << e.what() << '\n';
        return kCheckFailed;
    }
    catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    if (emit == "json")
        out << result.report.dump(2) << '\n';
    else
        render_text(result.report, out);
    return result.code;
}

} // namespace supercohom
