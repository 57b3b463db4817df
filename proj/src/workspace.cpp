#include "supercohom/workspace.hpp"

#include "supercohom/error.hpp"

#include <json.hpp>

#include <fstream>
#include <regex>
#include <sstream>

namespace supercohom {

namespace {

using Json = nlohmann::ordered_json;

struct Location {
    std::size_t line = 0;
    std::size_t column = 0;
};

Location offset_location(std::string_view text, std::size_t offset)
{
    Location loc{1, 1};
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++loc.line;
            loc.column = 1;
        }
        else {
            ++loc.column;
        }
    }
    return loc;
}

bool valid_label(const std::string& s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c == ',' || c == '[' || c == ']' || c == '"' || std::isspace(static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::string trim(std::string_view s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return std::string(s.substr(a, b - a));
}

int koszul_pair_sign(int p, int q) { return (p & q) ? -1 : 1; }

// Reports errors with a dotted path and the location of a token in the source text. The token is
// found by searching for its JSON-quoted form, so the location points at its first occurrence.
class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    [[noreturn]] void fail(const std::string& path, const std::string& what,
                           const std::string& token = {}) const
    {
        const Location loc = locate(token);
        throw ParseError(path + ": " + what, loc.line, loc.column);
    }

    const Json& member(const Json& obj, const std::string& key, const std::string& path) const
    {
        auto it = obj.find(key);
        if (it == obj.end())
            fail(path, "missing key '" + key + "'");
        return *it;
    }

    const Json& object(const Json& j, const std::string& path, const std::string& token) const
    {
        if (!j.is_object())
            fail(path, "expected an object", token);
        return j;
    }

    const Json& array(const Json& j, const std::string& path, const std::string& token) const
    {
        if (!j.is_array())
            fail(path, "expected a list", token);
        return j;
    }

    std::string string(const Json& j, const std::string& path, const std::string& token) const
    {
        if (!j.is_string())
            fail(path, "expected a string", token);
        return j.get<std::string>();
    }

    std::size_t count(const Json& j, const std::string& path, const std::string& token) const
    {
        if (!j.is_number_unsigned())
            fail(path, "expected a non-negative integer", token);
        return j.get<std::size_t>();
    }

    void only_keys(const Json& obj, std::initializer_list<const char*> allowed,
                   const std::string& path) const
    {
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            bool ok = false;
            for (const char* a : allowed)
                ok = ok || it.key() == a;
            if (!ok)
                fail(path, "unknown key '" + it.key() + "'", it.key());
        }
    }

    Scalar scalar(const Json& j, FieldSpec field, const std::string& path,
                  const std::string& token) const
    {
        const std::string s = string(j, path, token);
        try {
            return Scalar::parse(s, field);
        }
        catch (const Error& e) {
            fail(path, e.what(), token);
        }
    }

    std::size_t label(const GradedBasis& basis, const std::string& name, const std::string& path,
                      const std::string& token) const
    {
        auto i = basis.find(name);
        if (!i)
            fail(path, "unknown basis label '" + name + "'", token);
        return *i;
    }

    std::vector<std::string> tuple(const std::string& key, const std::string& path) const
    {
        const std::string t = trim(key);
        if (t.size() < 2 || t.front() != '[' || t.back() != ']')
            fail(path, "expected a tuple key like \"[a, b]\"", key);
        const std::string inner = trim(std::string_view(t).substr(1, t.size() - 2));
        std::vector<std::string> out;
        if (inner.empty())
            return out;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = inner.find(',', start);
            out.push_back(trim(std::string_view(inner).substr(
                start, comma == std::string::npos ? std::string::npos : comma - start)));
            if (out.back().empty())
                fail(path, "empty label in tuple", key);
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        return out;
    }

    Vector vector(const Json& j, const GradedBasis& basis, FieldSpec field,
                  const std::string& path, const std::string& token) const
    {
        object(j, path, token);
        Vector v(field);
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string sub = path + "." + it.key();
            v.add(label(basis, it.key(), sub, it.key()), scalar(it.value(), field, sub, it.key()));
        }
        return v;
    }

    BasisPtr basis(const Json& j, const std::string& path, const std::string& token) const
    {
        object(j, path, token);
        only_keys(j, {"even", "odd"}, path);
        std::vector<std::string> names;
        std::vector<int> parities;
        for (int p = 0; p < 2; ++p) {
            const char* key = p == 0 ? "even" : "odd";
            auto it = j.find(key);
            if (it == j.end())
                continue;
            array(*it, path + "." + key, key);
            for (const auto& n : *it) {
                std::string name = string(n, path + "." + key, key);
                if (!valid_label(name))
                    fail(path, "invalid basis label '" + name + "'", name);
                for (const auto& prev : names)
                    if (prev == name)
                        fail(path, "duplicate basis label '" + name + "'", name);
                names.push_back(std::move(name));
                parities.push_back(p);
            }
        }
        return make_basis(std::move(names), std::move(parities));
    }

    FieldSpec field(const Json& j) const
    {
        const std::string s = string(j, "field", "field");
        if (s == "rational")
            return FieldSpec::rational();
        static const std::regex cyc(R"(cyclotomic\((\d+)\))");
        std::smatch m;
        if (std::regex_match(s, m, cyc)) {
            try {
                return FieldSpec::cyclotomic(static_cast<unsigned>(std::stoul(m[1].str())));
            }
            catch (const std::exception& e) {
                fail("field", e.what(), s);
            }
        }
        fail("field", "expected \"rational\" or \"cyclotomic(m)\"", s);
    }

    // Bracket-like tables keyed "[a, b]" with i <= j; the other half follows by
    // super-antisymmetry.
    StructureTable bracket_table(const Json& j, const BasisPtr& basis, FieldSpec field,
                                 const std::string& path, const std::string& token) const
    {
        object(j, path, token);
        StructureTable t(field, basis, basis, basis);
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string sub = path + "." + it.key();
            const auto labels = tuple(it.key(), sub);
            if (labels.size() != 2)
                fail(sub, "a bracket needs exactly two labels", it.key());
            const std::size_t a = label(*basis, labels[0], sub, it.key());
            const std::size_t b = label(*basis, labels[1], sub, it.key());
            if (a > b)
                fail(sub, "bracket pairs are listed with i <= j; write [" + labels[1] + ", " +
                              labels[0] + "]",
                     it.key());
            Vector v = vector(it.value(), *basis, field, sub, it.key());
            const int sign = -koszul_pair_sign(basis->parity(a), basis->parity(b));
            if (a == b && sign == -1 && !v.is_zero())
                throw ValidationError("super-antisymmetry",
                                      "[" + labels[0] + ", " + labels[0] + "] = " +
                                          v.to_string(*basis) + " for an even basis vector");
            t(b, a) = v.scaled(Scalar(field, static_cast<long>(sign)));
            t(a, b) = std::move(v);
        }
        return t;
    }

    // Images g . e_j per group element; the identity may be omitted.
    std::vector<Matrix> action(const Json* j, const FiniteGroup& group, const BasisPtr& basis,
                               FieldSpec field, const std::string& path) const
    {
        std::vector<Matrix> mats(group.order(), Matrix::identity(field, basis->dim()));
        std::vector<bool> seen(group.order(), false);
        seen[group.identity()] = true;
        if (j) {
            object(*j, path, {});
            for (auto it = j->begin(); it != j->end(); ++it) {
                const std::string sub = path + "." + it.key();
                std::size_t g = 0;
                bool found = false;
                for (std::size_t k = 0; k < group.order(); ++k)
                    if (group.name(k) == it.key()) {
                        g = k;
                        found = true;
                    }
                if (!found)
                    fail(sub, "unknown group element '" + it.key() + "'", it.key());
                object(it.value(), sub, it.key());
                Matrix m(field, basis->dim(), basis->dim());
                for (std::size_t c = 0; c < basis->dim(); ++c) {
                    auto img = it.value().find(basis->name(c));
                    if (img == it.value().end())
                        fail(sub, "missing image of '" + basis->name(c) + "'", it.key());
                    const Vector v =
                        vector(*img, *basis, field, sub + "." + basis->name(c), basis->name(c));
                    for (const auto& [r, s] : v.terms())
                        m(r, c) = s;
                }
                for (auto img = it.value().begin(); img != it.value().end(); ++img)
                    label(*basis, img.key(), sub, img.key());
                mats[g] = std::move(m);
                seen[g] = true;
            }
        }
        for (std::size_t g = 0; g < group.order(); ++g)
            if (!seen[g])
                fail(path, "missing action of group element '" + group.name(g) + "'");
        return mats;
    }

    Location locate(const std::string& token) const
    {
        if (token.empty())
            return {};
        const std::string needle = Json(token).dump();
        const std::size_t pos = text_.find(needle);
        if (pos == std::string_view::npos)
            return {};
        return offset_location(text_, pos);
    }

private:
    std::string_view text_;
};

FiniteGroup read_group(const Reader& rd, const Json& j)
{
    rd.object(j, "group", "group");
    rd.only_keys(j, {"elements", "table", "odd"}, "group");
    std::vector<std::string> names;
    for (const auto& e : rd.array(rd.member(j, "elements", "group"), "group.elements", "elements"))
        names.push_back(rd.string(e, "group.elements", "elements"));
    auto index = [&](const std::string& n, const std::string& path) {
        for (std::size_t k = 0; k < names.size(); ++k)
            if (names[k] == n)
                return k;
        rd.fail(path, "unknown group element '" + n + "'", n);
    };
    const Json& tj = rd.array(rd.member(j, "table", "group"), "group.table", "table");
    if (tj.size() != names.size())
        rd.fail("group.table", "expected one row per element", "table");
    std::vector<std::vector<std::size_t>> table;
    for (const auto& row : tj) {
        rd.array(row, "group.table", "table");
        if (row.size() != names.size())
            rd.fail("group.table", "expected one entry per element in each row", "table");
        std::vector<std::size_t> r;
        for (const auto& e : row)
            r.push_back(index(rd.string(e, "group.table", "table"), "group.table"));
        table.push_back(std::move(r));
    }
    std::vector<int> parities(names.size(), 0);
    if (auto it = j.find("odd"); it != j.end())
        for (const auto& e : rd.array(*it, "group.odd", "odd"))
            parities[index(rd.string(e, "group.odd", "odd"), "group.odd")] = 1;
    return FiniteGroup(std::move(names), std::move(table), std::move(parities));
}

Json vector_json(const Vector& v, const GradedBasis& basis)
{
    Json out = Json::object();
    for (const auto& [i, c] : v.terms())
        out[basis.name(i)] = c.to_string();
    return out;
}

Json basis_json(const GradedBasis& b)
{
    Json even = Json::array(), odd = Json::array();
    for (std::size_t i = 0; i < b.dim(); ++i)
        (b.parity(i) ? odd : even).push_back(b.name(i));
    Json out = Json::object();
    out["even"] = std::move(even);
    out["odd"] = std::move(odd);
    return out;
}

Json bracket_json(const StructureTable& t)
{
    const auto& b = *t.left;
    Json out = Json::object();
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = i; j < b.dim(); ++j)
            if (!t(i, j).is_zero())
                out[tuple_label(b, {i, j})] = vector_json(t(i, j), b);
    return out;
}

Json action_json(const ActionRep& rep)
{
    const auto& b = *rep.space();
    Json out = Json::object();
    for (std::size_t g = 0; g < rep.group().order(); ++g) {
        if (g == rep.group().identity())
            continue;
        Json images = Json::object();
        for (std::size_t c = 0; c < b.dim(); ++c)
            images[b.name(c)] = vector_json(rep.apply(g, Vector::unit(rep.field(), c)), b);
        out[rep.group().name(g)] = std::move(images);
    }
    return out;
}

bool same_table(const StructureTable& a, const StructureTable& b)
{
    return a.field == b.field && *a.left == *b.left && *a.right == *b.right &&
           *a.target == *b.target && a.entries == b.entries;
}

} // namespace

std::string tuple_label(const GradedBasis& basis, const IndexTuple& tuple)
{
    std::string out = "[";
    for (std::size_t k = 0; k < tuple.size(); ++k)
        out += (k ? ", " : "") + basis.name(tuple[k]);
    return out + "]";
}

const CochainComplex& Workspace::complex(const std::string& module) const
{
    auto it = complexes.find(module);
    if (it == complexes.end())
        throw ParseError("no module named '" + module + "'");
    return *it->second;
}

std::vector<std::string> Workspace::module_names() const
{
    std::vector<std::string> out;
    for (const auto& [name, cx] : complexes)
        if (name != kAdjoint)
            out.push_back(name);
    return out;
}

const NamedCochain& Workspace::cochain(const std::string& name) const
{
    auto it = cochains.find(name);
    if (it == cochains.end())
        throw ParseError("no cochain named '" + name + "'");
    return it->second;
}

Deformation Workspace::deformation(const std::string& name) const
{
    auto it = deformations.find(name);
    if (it == deformations.end())
        throw ParseError("no deformation named '" + name + "'");
    std::vector<Cochain> higher;
    for (const auto& c : it->second)
        higher.push_back(cochain(c).cochain);
    return Deformation::from_higher_terms(complexes.at(kAdjoint), std::move(higher));
}

const StructureTable& Workspace::candidate(const std::string& name) const
{
    auto it = candidates.find(name);
    if (it == candidates.end())
        throw ParseError("no candidate named '" + name + "'");
    return it->second;
}

bool Workspace::operator==(const Workspace& other) const
{
    if (!(field == other.field && *algebra == *other.algebra && has_group == other.has_group &&
          *action == *other.action && deformations == other.deformations))
        return false;
    if (complexes.size() != other.complexes.size() || cochains.size() != other.cochains.size() ||
        candidates.size() != other.candidates.size())
        return false;
    for (const auto& [name, cx] : complexes) {
        auto it = other.complexes.find(name);
        if (it == other.complexes.end() || !(cx->module() == it->second->module()) ||
            !(cx->action_on_module() == it->second->action_on_module()))
            return false;
    }
    for (const auto& [name, c] : cochains) {
        auto it = other.cochains.find(name);
        if (it == other.cochains.end() || c.module != it->second.module ||
            !(c.cochain == it->second.cochain))
            return false;
    }
    for (const auto& [name, t] : candidates) {
        auto it = other.candidates.find(name);
        if (it == other.candidates.end() || !same_table(t, it->second))
            return false;
    }
    return true;
}

Workspace make_workspace(LieSuperalgebra algebra)
{
    const auto rep = ActionRep::trivial(trivial_group(), algebra.basis(), algebra.field());
    Workspace w = make_workspace(std::move(algebra), rep);
    w.has_group = false;
    return w;
}

Workspace make_workspace(LieSuperalgebra algebra, ActionRep action)
{
    Workspace w;
    w.field = algebra.field();
    w.has_group = true;
    w.algebra = std::make_shared<const LieSuperalgebra>(std::move(algebra));
    w.action = std::make_shared<const ActionRep>(std::move(action));
    w.complexes[kAdjoint] = adjoint_complex(*w.algebra, *w.action);
    return w;
}

void add_module(Workspace& w, const std::string& name, LModule module, ActionRep action)
{
    if (name == kAdjoint || !valid_label(name))
        throw PreconditionError("invalid module name '" + name + "'");
    w.complexes[name] =
        std::make_shared<const CochainComplex>(*w.algebra, std::move(module), *w.action, std::move(action));
}

Workspace parse_workspace(std::string_view text)
{
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    }
    catch (const Json::parse_error& e) {
        const Location loc = offset_location(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("malformed document: " + std::string(e.what()), loc.line, loc.column);
    }
    const Reader rd(text);
    rd.object(doc, "document", {});
    rd.only_keys(doc, {"field", "algebra", "group", "action", "modules", "cochains", "deformations",
                       "candidates"},
                 "document");

    const FieldSpec field = rd.field(rd.member(doc, "field", "document"));
    const Json& aj = rd.object(rd.member(doc, "algebra", "document"), "algebra", "algebra");
    rd.only_keys(aj, {"basis", "brackets"}, "algebra");
    const BasisPtr basis = rd.basis(rd.member(aj, "basis", "algebra"), "algebra.basis", "basis");
    StructureTable table = aj.contains("brackets")
                               ? rd.bracket_table(aj["brackets"], basis, field, "algebra.brackets",
                                                  "brackets")
                               : StructureTable(field, basis, basis, basis);
    LieSuperalgebra algebra(std::move(table));

    Workspace w;
    if (auto g = doc.find("group"); g != doc.end()) {
        FiniteGroup group = read_group(rd, *g);
        const Json* aj2 = doc.contains("action") ? &doc["action"] : nullptr;
        auto mats = rd.action(aj2, group, basis, field, "action");
        ActionRep rep(std::move(group), basis, field, std::move(mats));
        require_ok(validate_action(rep, algebra));
        w = make_workspace(std::move(algebra), std::move(rep));
    }
    else {
        if (doc.contains("action"))
            rd.fail("action", "an action needs a group section", "action");
        w = make_workspace(std::move(algebra));
    }
    const FiniteGroup& group = w.action->group();

    if (auto mj = doc.find("modules"); mj != doc.end()) {
        rd.object(*mj, "modules", "modules");
        for (auto it = mj->begin(); it != mj->end(); ++it) {
            const std::string path = "modules." + it.key();
            if (it.key() == kAdjoint || !valid_label(it.key()))
                rd.fail(path, "invalid module name", it.key());
            const Json& m = rd.object(it.value(), path, it.key());
            rd.only_keys(m, {"basis", "action", "group_action"}, path);
            const BasisPtr mb = rd.basis(rd.member(m, "basis", path), path + ".basis", it.key());
            StructureTable act(field, basis, mb, mb);
            if (auto a = m.find("action"); a != m.end()) {
                rd.object(*a, path + ".action", it.key());
                for (auto p = a->begin(); p != a->end(); ++p) {
                    const std::string sub = path + ".action." + p.key();
                    const auto labels = rd.tuple(p.key(), sub);
                    if (labels.size() != 2)
                        rd.fail(sub, "an action entry needs an algebra and a module label",
                                p.key());
                    const std::size_t x = rd.label(*basis, labels[0], sub, p.key());
                    const std::size_t v = rd.label(*mb, labels[1], sub, p.key());
                    act(x, v) = rd.vector(p.value(), *mb, field, sub, p.key());
                }
            }
            LModule module(*w.algebra, std::move(act));
            const Json* ga = m.contains("group_action") ? &m["group_action"] : nullptr;
            if (ga && !w.has_group)
                rd.fail(path + ".group_action", "a group action needs a group section",
                        "group_action");
            ActionRep rep(group, mb, field,
                          rd.action(ga, group, mb, field, path + ".group_action"));
            add_module(w, it.key(), std::move(module), std::move(rep));
        }
    }

    if (auto cj = doc.find("cochains"); cj != doc.end()) {
        rd.object(*cj, "cochains", "cochains");
        for (auto it = cj->begin(); it != cj->end(); ++it) {
            const std::string path = "cochains." + it.key();
            const Json& c = rd.object(it.value(), path, it.key());
            rd.only_keys(c, {"module", "arity", "parity", "values"}, path);
            const std::string module =
                c.contains("module") ? rd.string(c["module"], path + ".module", it.key()) : kAdjoint;
            if (!w.complexes.count(module))
                rd.fail(path + ".module", "unknown module '" + module + "'", module);
            const CochainComplex& cx = *w.complexes[module];
            const std::size_t arity = rd.count(rd.member(c, "arity", path), path + ".arity", it.key());
            const std::size_t parity =
                rd.count(rd.member(c, "parity", path), path + ".parity", it.key());
            if (parity > 1)
                rd.fail(path + ".parity", "parity must be 0 or 1", it.key());
            const SpacePtr space = cx.space(arity);
            Cochain f(space, static_cast<int>(parity), field);
            if (auto vj = c.find("values"); vj != c.end()) {
                rd.object(*vj, path + ".values", it.key());
                for (auto v = vj->begin(); v != vj->end(); ++v) {
                    const std::string sub = path + ".values." + v.key();
                    const auto labels = rd.tuple(v.key(), sub);
                    if (labels.size() != arity)
                        rd.fail(sub, "tuple length differs from the arity", v.key());
                    IndexTuple t;
                    for (const auto& l : labels)
                        t.push_back(rd.label(*basis, l, sub, v.key()));
                    const auto canon = canonicalize(*basis, t);
                    if (!canon)
                        rd.fail(sub, "a super-alternating cochain vanishes on a repeated even argument",
                                v.key());
                    if (canon->tuple != t)
                        rd.fail(sub, "tuple is not canonical; write " + tuple_label(*basis, canon->tuple),
                                v.key());
                    const std::size_t pos = *space->position(t);
                    f.set_value(pos, rd.vector(v.value(), *cx.module().space(), field, sub, v.key()));
                }
            }
            w.cochains.emplace(it.key(), NamedCochain{module, std::move(f)});
        }
    }

    if (auto dj = doc.find("deformations"); dj != doc.end()) {
        rd.object(*dj, "deformations", "deformations");
        for (auto it = dj->begin(); it != dj->end(); ++it) {
            const std::string path = "deformations." + it.key();
            std::vector<std::string> terms;
            for (const auto& t : rd.array(it.value(), path, it.key())) {
                std::string name = rd.string(t, path, it.key());
                auto c = w.cochains.find(name);
                if (c == w.cochains.end())
                    rd.fail(path, "unknown cochain '" + name + "'", name);
                if (c->second.module != kAdjoint || c->second.cochain.arity() != 2)
                    rd.fail(path, "deformation terms are adjoint 2-cochains; '" + name + "' is not",
                            name);
                terms.push_back(std::move(name));
            }
            w.deformations.emplace(it.key(), std::move(terms));
        }
    }

    if (auto cj = doc.find("candidates"); cj != doc.end()) {
        rd.object(*cj, "candidates", "candidates");
        for (auto it = cj->begin(); it != cj->end(); ++it)
            w.candidates.emplace(it.key(), rd.bracket_table(it.value(), basis, field,
                                                            "candidates." + it.key(), it.key()));
    }
    return w;
}

Workspace load_workspace(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_workspace(ss.str());
}

std::string serialize(const Workspace& w)
{
    Json out = Json::object();
    out["field"] = w.field.to_string();
    Json alg = Json::object();
    alg["basis"] = basis_json(*w.algebra->basis());
    alg["brackets"] = bracket_json(w.algebra->table());
    out["algebra"] = std::move(alg);
    if (w.has_group) {
        const FiniteGroup& g = w.action->group();
        Json group = Json::object();
        group["elements"] = g.names();
        Json table = Json::array();
        for (const auto& row : g.table()) {
            Json r = Json::array();
            for (std::size_t k : row)
                r.push_back(g.name(k));
            table.push_back(std::move(r));
        }
        group["table"] = std::move(table);
        Json odd = Json::array();
        for (std::size_t k = 0; k < g.order(); ++k)
            if (g.parity(k))
                odd.push_back(g.name(k));
        if (!odd.empty())
            group["odd"] = std::move(odd);
        out["group"] = std::move(group);
        out["action"] = action_json(*w.action);
    }
    if (!w.module_names().empty()) {
        Json modules = Json::object();
        for (const auto& name : w.module_names()) {
            const CochainComplex& cx = *w.complexes.at(name);
            const auto& l = *cx.algebra().basis();
            const auto& mb = *cx.module().space();
            Json m = Json::object();
            m["basis"] = basis_json(mb);
            Json act = Json::object();
            for (std::size_t x = 0; x < l.dim(); ++x)
                for (std::size_t v = 0; v < mb.dim(); ++v)
                    if (!cx.module().act(x, v).is_zero())
                        act["[" + l.name(x) + ", " + mb.name(v) + "]"] =
                            vector_json(cx.module().act(x, v), mb);
            m["action"] = std::move(act);
            if (w.has_group)
                m["group_action"] = action_json(cx.action_on_module());
            modules[name] = std::move(m);
        }
        out["modules"] = std::move(modules);
    }
    if (!w.cochains.empty()) {
        Json cochains = Json::object();
        for (const auto& [name, c] : w.cochains) {
            const auto& f = c.cochain;
            const auto& sp = *f.space();
            Json j = Json::object();
            j["module"] = c.module;
            j["arity"] = f.arity();
            j["parity"] = f.parity();
            Json values = Json::object();
            for (std::size_t t = 0; t < sp.tuples().size(); ++t) {
                const Vector v = f.value(t);
                if (!v.is_zero())
                    values[tuple_label(*sp.source(), sp.tuples()[t])] = vector_json(v, *sp.target());
            }
            j["values"] = std::move(values);
            cochains[name] = std::move(j);
        }
        out["cochains"] = std::move(cochains);
    }
    if (!w.deformations.empty())
        out["deformations"] = w.deformations;
    if (!w.candidates.empty()) {
        Json cands = Json::object();
        for (const auto& [name, t] : w.candidates)
            cands[name] = bracket_json(t);
        out["candidates"] = std::move(cands);
    }
    return out.dump(2) + "\n";
}

} // namespace supercohom
