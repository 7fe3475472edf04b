#pragma once

// JSON encodings of library results. Key order is fixed so equal inputs
// give byte-identical output.

#include <nlohmann/json.hpp>

#include "torusfill/fillability.hpp"
#include "torusfill/homology.hpp"
#include "torusfill/mcgwords.hpp"
#include "torusfill/seqcalc.hpp"
#include "torusfill/sl2z.hpp"

namespace torusfill {

using Json = nlohmann::ordered_json;

Json to_json(const Mat2& m);  // [[a, b], [c, d]]
Json to_json(const IntMatrix& m);
Json to_json(const DSeq& d);  // [d1, ..., dk]
Json to_json(const BundleClass& c);
Json to_json(const AbelianGroup& g);
Json to_json(const BettiLedger& l);
Json to_json(const BlockForm& f);
Json to_json(const BlowupWitness& w);
Json to_json(const ParabolicNF& nf);
Json to_json(const HyperbolicNF& nf);
Json to_json(const Theorem14Ledger& l);
Json to_json(const CobordismReduction& r);
Json to_json(const EmbeddingResult& r);
Json to_json(const ParabolicCobordism& w);
Json to_json(const Verdict& v);
Json to_json(const DivisorReport& r);
Json to_json(const DerivationResult& r);
Json to_json(const PositivityResult& r);

Mat2 mat2_from_json(const Json& j);
DSeq dseq_from_json(const Json& j);

}  // namespace torusfill
