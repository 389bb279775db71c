#include "polyvar/report.hpp"

namespace polyvar {

std::string sign_key(const std::vector<int>& signs) {
    std::string s;
    for (int v : signs) s += (v > 0 ? '+' : (v < 0 ? '-' : '0'));
    return s;
}

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Polynomial& p) { return p.to_string(); }

Json to_json(const RationalPoint& p) {
    Json arr = Json::array();
    for (const auto& c : p.coords) arr.push_back(c.to_string());
    return arr;
}

Json to_json(const HilbertData& d) {
    Json values = Json::object();
    for (const auto& [m, v] : d.values) values[std::to_string(m)] = v;
    return Json{{"values", values},
                {"dim", d.dim},
                {"degree", d.degree},
                {"c0_observed", d.c0_sampled ? Json(d.c0_observed.to_string()) : Json(nullptr)},
                {"c0_threshold_m", d.c0_threshold_m}};
}

Json to_json(const GroebnerBasis& gb) {
    Json arr = Json::array();
    for (const auto& p : gb.basis) arr.push_back(p.to_string());
    return Json{{"basis", arr}, {"reduced", gb.reduced}};
}

Json to_json(const ComponentInfo& c) {
    Json gens = Json::array();
    for (const auto& g : c.ideal.generators()) gens.push_back(g.to_string());
    return Json{{"generators", gens},
                {"dim", c.dim},
                {"degree", c.degree},
                {"contains_v", c.contains_v}};
}

Json to_json(const DeltaProfile& p) {
    Json stages = Json::array();
    for (const auto& s : p.stages) {
        Json comps = Json::array();
        for (const auto& c : s.components) comps.push_back(to_json(c));
        stages.push_back(Json{{"stage", s.stage},
                              {"delta", s.delta},
                              {"decomposed", s.decomposed},
                              {"dimension_ok", s.dimension_ok},
                              {"minimal_witness", s.minimal_witness},
                              {"components", comps}});
    }
    Json bd = Json::array();
    for (const auto& b : p.big_deltas) bd.push_back(b.to_string());
    Json tuple = Json::array();
    for (const auto& q : p.tuple) tuple.push_back(q.to_string());
    return Json{{"n", p.n},          {"d", p.d},
                {"deg_v", p.deg_v},  {"deltas", p.deltas},
                {"big_deltas", bd},  {"admissible", p.admissible},
                {"tuple", tuple},    {"certified", p.certified},
                {"stages", stages}};
}

Json to_json(const SiegelResult& r) {
    return Json{{"polynomial", r.p.to_string()},
                {"degree", r.degree},
                {"minimal", r.minimal},
                {"non_member_of_v", r.non_member_of_v},
                {"certified_targets", r.certified_targets},
                {"degree_ratio",
                 r.degree_ratio_available ? Json(r.degree_ratio.to_string()) : Json(nullptr)}};
}

Json to_json(const PartitionReport& r) {
    Json rounds = Json::array();
    for (const auto& c : r.census) {
        Json classes = Json::object();
        for (const auto& [signs, count] : c.class_sizes) classes[sign_key(signs)] = count;
        rounds.push_back(Json{{"classes", classes},
                              {"on_zero_set", c.on_zero_set},
                              {"max_class", c.max_class},
                              {"bisector_degree", c.bisector_degree},
                              {"quotient_degree", c.quotient_degree}});
    }
    return Json{{"i_v", r.i_v},
                {"i_v_fallback", r.i_v_fallback},
                {"r_target", r.r_target.to_string()},
                {"rounds", r.rounds},
                {"census", rounds},
                {"final_max_class", r.final_max_class},
                {"total_degree", r.total_degree},
                {"degree_over_m", r.degree_over_m.to_string()}};
}

Json to_json(const EnvelopeReport& r) {
    Json stages = Json::array();
    for (const auto& s : r.stages) {
        Json surface = Json::array(), env = Json::array();
        for (const auto& c : s.surface) surface.push_back(to_json(c));
        for (const auto& c : s.envelope) env.push_back(to_json(c));
        stages.push_back(Json{{"stage", s.stage},
                              {"surface", surface},
                              {"envelope", env},
                              {"bezout_degree_bound", s.bezout_degree_bound.to_string()},
                              {"surface_degree_sum", s.surface_degree_sum},
                              {"degree_bound_holds", s.degree_bound_holds}});
    }
    Json comps = Json::array();
    for (const auto& c : r.envelope_components) comps.push_back(to_json(c));
    return Json{{"stages", stages}, {"envelope_components", comps}, {"location_ok", r.location_ok}};
}

namespace {
Json cover_node_json(const CoverNode& n) {
    Json tuple = Json::array();
    for (const auto& q : n.tuple) tuple.push_back(q.to_string());
    Json children = Json::array();
    for (const auto& c : n.children) children.push_back(cover_node_json(c));
    Json gens = Json::array();
    for (const auto& g : n.ideal.generators()) gens.push_back(g.to_string());
    return Json{{"generators", gens}, {"dim", n.dim},      {"degree", n.degree},
                {"tuple", tuple},     {"children", children}};
}
}  // namespace

Json to_json(const FullCover& c) {
    Json flat = Json::array();
    for (const auto& f : c.flattened) flat.push_back(to_json(f));
    return Json{{"root", cover_node_json(c.root)},
                {"flattened", flat},
                {"degree_sum", c.degree_sum},
                {"degree_ratio", c.degree_ratio.to_string()},
                {"v_is_component", c.v_is_component}};
}

Json to_json(const BoundReport& r) {
    return Json{{"alpha", r.alpha.to_string()},
                {"beta", r.beta.to_string()},
                {"tau", r.tau.to_string()},
                {"main_term", r.main_term.to_string()},
                {"surface_term", r.surface_term.to_string()},
                {"point_term", r.point_term.to_string()},
                {"total", r.total.to_string()},
                {"dominant", r.dominant},
                {"exponent_identity_ok", r.exponent_identity_ok}};
}

Json to_json(const GridComponentEstimate& e) {
    return Json{{"resolution", e.resolution},
                {"zero_components", e.zero_components},
                {"complement_components", e.complement_components},
                {"positive_components", e.positive_components},
                {"negative_components", e.negative_components}};
}

Json to_json(const StableGridEstimate& e) {
    return Json{{"coarse", to_json(e.coarse)},
                {"fine", to_json(e.fine)},
                {"resolution_too_coarse", e.resolution_too_coarse}};
}

Json to_json(const SharpConstructionResult& r) {
    Json surfaces = Json::array();
    for (const auto& t : r.structure.hypersurfaces) surfaces.push_back(t.to_string());
    Json points = Json::array();
    for (const auto& p : r.structure.points) points.push_back(to_json(p));
    Json members = Json::array();
    for (const auto& m : r.regularized.members) members.push_back(m);
    return Json{{"points", points},
                {"hypersurfaces", surfaces},
                {"regularized_members", members},
                {"block_size", r.block_size},
                {"degree", r.degree},
                {"clamped_block_size", r.clamped_block_size},
                {"minor_budget_exhausted", r.minor_budget_exhausted},
                {"size_condition_ok", r.size_condition_ok},
                {"graph_equal", r.graph_equal},
                {"kb_free_ok", r.kb_free_ok},
                {"measured_ratio", r.measured_ratio.to_string()}};
}

Json to_json(const PartitionedIncidenceReport& r) {
    Json classes = Json::object();
    for (const auto& [signs, count] : r.class_incidences) classes[sign_key(signs)] = count;
    return Json{{"class_incidences", classes},
                {"on_zero_incidences", r.on_zero_incidences},
                {"total", r.total},
                {"partition", to_json(r.partition)}};
}

Json to_json(const TupleCertificate& c) {
    Json stages = Json::array();
    for (const auto& s : c.stages)
        stages.push_back(Json{{"stage", s.stage},
                              {"degree_ok", s.degree_ok},
                              {"membership_ok", s.membership_ok},
                              {"decomposed", s.decomposed},
                              {"dimension_ok", s.dimension_ok},
                              {"minimal_ok", s.minimal_ok},
                              {"unknown", s.unknown}});
    return Json{{"stages", stages}, {"all_certified", c.all_certified}};
}

Json to_json(const ConverseBezoutReport& r) {
    Json ratios = Json::array();
    for (const auto& [stage, ratio] : r.stage_ratios)
        ratios.push_back(Json{{"stage", stage}, {"ratio", ratio.to_string()}});
    return Json{{"degree_ratio", r.degree_ratio.to_string()},
                {"bezu_upper_holds", r.bezu_upper_holds},
                {"stage_ratios", ratios}};
}

}  // namespace polyvar
