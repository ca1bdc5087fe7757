#pragma once

#include <json.hpp>

#include "colorlie/lc2.hpp"

namespace colorlie {

using Json = nlohmann::json;

/// A parsed algebra input document: one cyclotomic order and grading group,
/// then whatever optional sections the commands need. Parsing validates
/// structure (shapes, index ranges, literals, degree additivity) but runs no
/// semantic checks.
struct AlgebraFile {
    unsigned cyclotomic_order = 1;
    GradingGroup group;
    Bicharacter bichar;
    SpacePtr space;

    std::optional<BracketTable> bracket;

    struct RepSection {
        SpacePtr module;
        std::vector<GradedMap> maps;
    };
    std::optional<RepSection> representation;

    std::optional<std::vector<std::vector<Scalar>>> quadratic_gram;

    std::optional<TwoTermAlgebra> two_term;
    std::optional<CrossedModule> crossed_module;

    /// Named raw subspaces; coordinate length is interpreted per command
    /// (vectors over V, or over E = gl(V) + V).
    std::vector<std::pair<std::string, std::vector<std::vector<Scalar>>>> subspaces;

    /// A Lie structure on a sub-basis of V, for the Dirac construction.
    struct WSection {
        std::vector<Vec> basis;
        BracketTable bracket; // over the pattern space of `basis`
    };
    std::optional<WSection> w_subalgebra;

    ColorAlgebra algebra() const; // requires bracket
    QuadraticForm quadratic() const;
    Representation rep() const;
};

AlgebraFile parse_algebra_file(const std::string& text);

/// Scalar from a JSON literal: string in the scalar grammar or a plain
/// integer.
Scalar scalar_from_json(unsigned m, const Json& j);

// Serialization helpers used by the fixture generators.
Json space_to_json(const SpacePtr& s);
Json matrix_to_json(const std::vector<std::vector<Scalar>>& mat);
Json bracket_to_json(const BracketTable& t);
Json two_term_to_json(const TwoTermAlgebra& t);
Json crossed_to_json(const CrossedModule& c);

} // namespace colorlie
