#pragma once

#include <json.hpp>

#include <string>

#include "braids/closure.hpp"
#include "braids/d_invariant.hpp"
#include "braids/laurent.hpp"
#include "braids/markov.hpp"
#include "braids/normal_form.hpp"
#include "braids/orbit.hpp"
#include "braids/simple.hpp"
#include "braids/word.hpp"

namespace braids {

using Json = nlohmann::ordered_json;

// {"exponent": "p/q"} in strictly decreasing exponent order.
inline Json json_of(const Laurent& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = to_string(c);
  return j;
}

inline Json json_of(const Permutation& p) {
  Json j = Json::array();
  for (int i = 1; i <= p.size(); ++i) j.push_back(p.image(i));
  return j;
}

// A normal form serializes as the sequence of factor image-lists.
inline Json json_of(const NormalForm& nf) {
  Json factors = Json::array();
  for (const auto& f : nf.factors()) factors.push_back(json_of(f));
  Json j = Json::object();
  j["strands"] = nf.strands();
  j["degree"] = nf.degree();
  j["square_free"] = nf.is_square_free();
  j["canonical_word"] = to_text(nf.canonical_word());
  j["factors"] = factors;
  return j;
}

inline Json json_of(const MarkovMove& m) {
  Json j = Json::object();
  j["kind"] = to_string(m.kind);
  if (m.conjugator) j["conjugator"] = to_text(*m.conjugator);
  j["strands_before"] = m.strands_before;
  j["strands_after"] = m.strands_after;
  return j;
}

inline Json json_of(const std::vector<MarkovMove>& moves) {
  Json j = Json::array();
  for (const auto& m : moves) j.push_back(json_of(m));
  return j;
}

inline Json json_of(const CycleDecomposition& d) {
  Json cycles = Json::array();
  for (const auto& c : d.cycles) {
    Json fs = Json::array();
    for (const auto& f : c.factors) fs.push_back(to_string(f));
    cycles.push_back(fs);
  }
  Json j = Json::object();
  j["strands"] = d.strands;
  j["text"] = to_string(d);
  j["cycles"] = cycles;
  return j;
}

inline Json json_of(const ConjugacyType& t) {
  Json j = Json::object();
  j["text"] = to_string(t);
  j["parts"] = t.parts;
  j["strands"] = t.strands;
  j["trivial"] = t.trivial_strands();
  return j;
}

inline Json json_of(const OrbitResult& o) {
  Json members = Json::array();
  for (const auto& m : o.members) members.push_back(to_text(m.canonical_word()));
  Json j = Json::object();
  j["size"] = o.members.size();
  j["complete"] = o.complete;
  j["all_square_free"] = o.all_square_free;
  j["members"] = members;
  if (o.witness) {
    Json w = Json::object();
    w["conjugator"] = to_text(o.witness->conjugator);
    w["word"] = to_text(o.witness->word);
    j["witness"] = w;
  }
  return j;
}

inline Json json_of_linking(const BraidWord& w) {
  Json comps = Json::array();
  for (const auto& c : closure_components(w)) comps.push_back(c);
  Json matrix = Json::array();
  for (const auto& row : linking_matrix(w)) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    matrix.push_back(r);
  }
  Json j = Json::object();
  j["components"] = comps;
  j["linking_matrix"] = matrix;
  return j;
}

}  // namespace braids
