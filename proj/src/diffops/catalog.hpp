#pragma once

#include "diffops/algrel.hpp"
#include "diffops/linear_ode.hpp"
#include "special/ekpoly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace lamext {

// Transcription catalog of the named operators and bivariate relations this
// workbench verifies against. Each operator entry can ship a companion
// series (n -> series) it must annihilate; the test suites exercise those.
struct CatalogEntry {
    std::string name;
    std::string role;
    LinearODE op;
    std::function<SeriesQ(int)> companion;  // may be empty
};

const std::vector<std::string>& catalog_operator_names();
const CatalogEntry& paper_operator(const std::string& name);

// exact intertwiner forms (R1, R2, R3): coefficients kept as written so the
// operators act as the intended maps, not just as annihilator classes
const RatOperator& paper_intertwiner(const std::string& name);

struct RelationEntry {
    std::string name;
    std::string role;
    AlgRelQ rel;
    std::uint64_t modulus = 0;  // 0 = characteristic zero, else reduce mod p
};

const std::vector<std::string>& catalog_relation_names();
const RelationEntry& paper_relation(const std::string& name);

// order-one operator with E,K-polynomial coefficients whose composition with
// the annihilator of E kills the first deformation coefficient g1;
// returns (coefficient of D^0, coefficient of D^1)
std::pair<EKPoly, EKPoly> ddfinite_l1();

}  // namespace lamext
