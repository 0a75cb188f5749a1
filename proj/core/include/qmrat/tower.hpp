#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmrat/poly.hpp"

namespace qmrat {

// Relation satisfied by a tower generator g:
//   Free         transcendental over the earlier part of the tower
//   Sqrt(rhs)    g^2 = rhs
//   Cbrt(rhs)    g^3 = rhs
//   Omega        g^2 = -1 - g   (primitive cube root of unity)
// rhs is a polynomial in strictly earlier generators.
enum class RelKind { Free, Sqrt, Cbrt, Omega };

struct TowerGenerator {
    std::string name;
    RelKind kind = RelKind::Free;
    MultiPoly rhs; // Sqrt/Cbrt only
};

// A coefficient tower K = Q(g_0, g_1, ...) together with the function-field
// variables.  Symbol ids are assigned in declaration order: generators
// first, then variables.
class TowerSpec {
  public:
    int add_free(const std::string& name);
    int add_sqrt(const std::string& name, const MultiPoly& rhs);
    int add_cbrt(const std::string& name, const MultiPoly& rhs);
    int add_omega(const std::string& name);
    int add_var(const std::string& name);

    int symbol_count() const { return static_cast<int>(names_.size()); }
    int generator_count() const { return static_cast<int>(gens_.size()); }
    int variable_count() const { return symbol_count() - generator_count(); }

    const std::string& name(int id) const { return names_[id]; }
    std::optional<int> find(const std::string& name) const;
    int require(const std::string& name) const;

    bool is_variable(int id) const { return id >= generator_count(); }
    bool is_generator(int id) const { return id < generator_count(); }
    const TowerGenerator& generator(int id) const { return gens_[id]; }

    // Degree of the rewrite rule for a bound generator (2 or 3); 0 for Free.
    int relation_degree(int id) const;

  private:
    int add_symbol(const std::string& name);
    void check_rhs(const MultiPoly& rhs, int before_id) const;

    std::vector<std::string> names_;
    std::vector<TowerGenerator> gens_;
    bool has_omega_ = false;
};

// Rewrite p so that every bound generator's exponent is below its relation
// degree.  Unique normal form for a triangular tower.
MultiPoly normal_form(const MultiPoly& p, const TowerSpec& t);

} // namespace qmrat
