#pragma once

#include "supercohom/deformation.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace supercohom {

/// Name under which the adjoint module is referenced by cochains and commands.
inline constexpr const char* kAdjoint = "adjoint";

struct NamedCochain {
    std::string module;
    Cochain cochain;
};

/// Everything a workspace file describes. The algebra, actions and modules are validated when the
/// workspace is built; cochains are only checked for shape and homogeneity.
struct Workspace {
    FieldSpec field;
    std::shared_ptr<const LieSuperalgebra> algebra;
    /// False when the file has no group section; the action is then the trivial group.
    bool has_group = false;
    std::shared_ptr<const ActionRep> action;
    /// Complexes by module name, always including kAdjoint.
    std::map<std::string, ComplexPtr> complexes;
    std::map<std::string, NamedCochain> cochains;
    /// Deformation name -> names of mu_1..mu_N (adjoint 2-cochains).
    std::map<std::string, std::vector<std::string>> deformations;
    /// Candidate brackets for mc-check; not required to satisfy any axiom.
    std::map<std::string, StructureTable> candidates;

    const CochainComplex& complex(const std::string& module) const;
    /// Names of the declared modules, excluding the adjoint one.
    std::vector<std::string> module_names() const;
    const NamedCochain& cochain(const std::string& name) const;
    Deformation deformation(const std::string& name) const;
    const StructureTable& candidate(const std::string& name) const;

    bool operator==(const Workspace& other) const;
};

/// Parses and validates a workspace document. Syntax and reference errors raise ParseError with the
/// line and column of the offending token; failed axioms raise ValidationError.
Workspace parse_workspace(std::string_view text);
Workspace load_workspace(const std::string& path);

/// Canonical text of a workspace: fixed key order, only i <= j bracket pairs, canonical tuples,
/// zero entries dropped, two-space indentation and a trailing newline.
std::string serialize(const Workspace& w);

/// Builder used by the fixtures: adds a module with its group action.
void add_module(Workspace& w, const std::string& name, LModule module, ActionRep action);
Workspace make_workspace(LieSuperalgebra algebra);
Workspace make_workspace(LieSuperalgebra algebra, ActionRep action);

/// "[a, b, c]" with basis labels.
std::string tuple_label(const GradedBasis& basis, const IndexTuple& tuple);

} // namespace supercohom
