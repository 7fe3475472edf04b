#include "torusfill/serialize.hpp"

#include "torusfill/error.hpp"

namespace torusfill {

Json to_json(const Mat2& m) { return Json::array({Json::array({m.a, m.b}), Json::array({m.c, m.d})}); }

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const DSeq& d) { return Json(d.entries()); }

Json to_json(const BundleClass& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["sign"] = to_string(c.sign);
  j["trace"] = c.trace;
  return j;
}

Json to_json(const AbelianGroup& g) {
  Json j;
  j["text"] = format_group(g);
  j["betti"] = g.betti;
  j["torsion"] = g.torsion;
  return j;
}

Json to_json(const BettiLedger& l) {
  Json j;
  j["b2plus"] = l.b2plus;
  j["b2minus"] = l.b2minus;
  j["lower_bound"] = l.lower_bound;
  j["provenance"] = l.provenance;
  return j;
}

Json to_json(const BlockForm& f) {
  Json blocks = Json::array();
  for (const Block& b : f.blocks) blocks.push_back(Json{{"n", b.n}, {"m", b.m}});
  Json j;
  j["text"] = format_blocks(f);
  j["s"] = f.s();
  j["sum_n"] = f.sum_n();
  j["sum_m"] = f.sum_m();
  j["rotation"] = f.rotation;
  j["blocks"] = std::move(blocks);
  return j;
}

Json to_json(const BlowupWitness& w) {
  Json j;
  j["edges"] = w.edges;
  j["reached"] = to_json(w.reached);
  j["rotation"] = w.rotation;
  return j;
}

Json to_json(const ParabolicNF& nf) {
  Json j;
  j["sign"] = nf.sign;
  j["n"] = nf.n;
  j["conjugator"] = to_json(nf.conjugator);
  return j;
}

Json to_json(const HyperbolicNF& nf) {
  Json j;
  j["d"] = to_json(nf.d);
  j["conjugator"] = to_json(nf.conjugator);
  return j;
}

Json to_json(const Theorem14Ledger& l) {
  Json j;
  j["blocks"] = to_json(l.blocks);
  j["handles"] = l.handles;
  j["d0"] = to_json(l.d0);
  j["c"] = l.c;
  j["b2minus_lower"] = l.lower;
  j["b2minus_upper"] = l.upper;
  j["passes"] = l.passes;
  return j;
}

Json to_json(const CobordismReduction& r) {
  Json stages = Json::array();
  for (const CobordismStage& s : r.stages) {
    Json st;
    st["from"] = to_json(s.from);
    st["handles"] = s.handles;
    st["after_surgery"] = to_json(s.after_surgery);
    st["to"] = to_json(s.to);
    stages.push_back(std::move(st));
  }
  Json j;
  j["stages"] = std::move(stages);
  j["final"] = to_json(r.final);
  j["total_handles"] = r.total_handles;
  Json ledger = to_json(r.ledger);
  ledger.erase("provenance");  // one identical entry per handle
  j["ledger"] = std::move(ledger);
  return j;
}

Json to_json(const EmbeddingResult& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  j["target"] = to_json(r.target);
  j["witness"] = r.witness ? to_json(*r.witness) : Json();
  j["citation"] = r.citation;
  return j;
}

Json to_json(const ParabolicCobordism& w) {
  Json j;
  j["ledger"] = to_json(w.ledger);
  j["handle_form"] = to_json(w.handle_form);
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["weak"] = to_string(v.weak());
  j["strong"] = to_string(v.strong());
  j["stein"] = to_string(v.stein());
  j["citations"] = v.citations;
  j["notes"] = v.notes;
  if (v.witness) {
    j["witness"] = std::visit(
        [](const auto& w) -> Json {
          using W = std::decay_t<decltype(w)>;
          Json out;
          if constexpr (std::is_same_v<W, EmbeddingWitness>) {
            out["type"] = "embedding";
            out["d"] = to_json(w.d);
            out["embedding"] = to_json(w.result);
          } else if constexpr (std::is_same_v<W, Theorem14Ledger>) {
            out["type"] = "handle_ledger";
            out["ledger"] = to_json(w);
          } else {
            out["type"] = "parabolic_cobordism";
            out["cobordism"] = to_json(w);
          }
          return out;
        },
        *v.witness);
  }
  return j;
}

Json to_json(const DivisorReport& r) {
  Json j;
  j["e"] = r.e;
  j["form"] = to_json(r.form);
  j["form_det"] = r.form_det;
  j["monodromy"] = to_json(r.monodromy);
  j["bundle"] = to_json(r.bundle);
  j["branch"] = r.branch;
  j["bridge_holds"] = r.bridge_holds;
  j["contact_structure"] = "universally tight";
  return j;
}

Json to_json(const DerivationResult& r) {
  Json j;
  if (const auto* f = std::get_if<Failed>(&r)) {
    j["status"] = "Failed";
    j["step"] = f->step;
    j["reason"] = f->reason;
  } else {
    j["status"] = "Verified";
  }
  return j;
}

Json to_json(const PositivityResult& r) {
  Json j;
  if (const auto* p = std::get_if<Positive>(&r)) {
    j["status"] = "Positive";
    Json blocks = Json::array();
    for (const PositiveBlock& b : p->blocks) {
      Json bj;
      bj["begin"] = b.begin;
      bj["end"] = b.end;
      bj["conjugator"] = format_word(b.conjugator);
      bj["curve"] = curve_name(b.curve);
      blocks.push_back(std::move(bj));
    }
    j["blocks"] = std::move(blocks);
  } else {
    j["status"] = "NotRecognized";
  }
  return j;
}

Mat2 mat2_from_json(const Json& j) {
  try {
    return Mat2{j.at(0).at(0).get<Int>(), j.at(0).at(1).get<Int>(), j.at(1).at(0).get<Int>(),
                j.at(1).at(1).get<Int>()};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("matrix json: ") + e.what());
  }
}

DSeq dseq_from_json(const Json& j) {
  try {
    return DSeq(j.get<std::vector<Int>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("sequence json: ") + e.what());
  }
}

}  // namespace torusfill
