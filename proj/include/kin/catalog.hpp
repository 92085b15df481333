#pragma once

#include <map>
#include <string>
#include <vector>

#include "kin/contraction.hpp"

namespace kin {

struct DualityPair {
    std::string left, right;  // left == right marks a self-dual row
    int sign_g = 1, sign_h = 1;
};

struct AdditivityTriple {
    std::string a, b, target;
    int sign_a = 1;  // recorded sign of the first summand
};

struct GenuineKinematicsRow {
    KinematicsClass cls;
    int curvature_sign;  // +1, 0, -1
    std::string geometry;
};

// The built-in immutable definitions: generator families, the 22 non-static
// algebras, the 45 geometries, every contraction recipe, the duality pairs,
// the time/space contrast rows and the genuine-kinematics table.
class Catalog {
public:
    static const Catalog& instance();

    const std::vector<std::string>& algebra_names() const { return algebra_names_; }
    const std::vector<std::string>& geometry_names() const { return geometry_names_; }

    bool has_algebra(const std::string& name) const { return algebras_.count(name) != 0; }
    bool has_geometry(const std::string& name) const { return geometries_.count(name) != 0; }

    // Throws UnknownAlgebra; the two static rows throw StaticExcluded.
    const AlgebraPresentation& algebra(const std::string& name) const;
    const Geometry& geometry(const std::string& name) const;

    const std::vector<AlgebraRecipe>& algebra_recipes() const { return algebra_recipes_; }
    const std::vector<GeometryRecipe>& geometry_recipes() const { return geometry_recipes_; }
    const std::vector<DualityPair>& duality_pairs() const { return duality_pairs_; }
    const std::vector<AdditivityTriple>& additivity() const { return additivity_; }
    const std::vector<GenuineKinematicsRow>& genuine_rows() const { return genuine_; }

    // The involutive present <-> time-infinity chart map.
    const RationalMap& duality_map() const { return duality_map_; }

    std::string version() const { return "kincat-1"; }

    std::string dump_text() const;
    std::string dump_json() const;

private:
    Catalog();
    void build_algebras();
    void build_geometries();
    void build_recipes();
    void build_relations();

    std::vector<std::string> algebra_names_, geometry_names_;
    std::map<std::string, AlgebraPresentation> algebras_;
    std::map<std::string, Geometry> geometries_;
    std::vector<AlgebraRecipe> algebra_recipes_;
    std::vector<GeometryRecipe> geometry_recipes_;
    std::vector<DualityPair> duality_pairs_;
    std::vector<AdditivityTriple> additivity_;
    std::vector<GenuineKinematicsRow> genuine_;
    RationalMap duality_map_;
};

}  // namespace kin
