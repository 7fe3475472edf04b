#include "torusfill/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "torusfill/homology.hpp"
#include "torusfill/seqcalc.hpp"

namespace torusfill::cli {

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Classify: return "classify";
    case Command::H1: return "h1";
    case Command::NormalForm: return "normal-form";
    case Command::Rho: return "rho";
    case Command::Reduce: return "reduce";
    case Command::Ledger: return "ledger";
    case Command::Verdict: return "verdict";
    case Command::EmbedSearch: return "embed-search";
    case Command::Divisor: return "divisor";
    case Command::McgVerify: return "mcg-verify";
  }
  return "?";
}

namespace {

struct Flags {
  std::optional<std::string> matrix, seq, structure, e, script, word;
  std::optional<Int> n, m;
  bool json = false;
  std::optional<Int> budget, bound;
};

class Parser {
 public:
  Parser() : app_("Fillability calculator for contact torus bundles", "torusfill") {
    app_.require_subcommand(1);
    app_.fallthrough();
    app_.add_flag("--json", f_.json, "Emit a JSON report");
    app_.add_option("--budget", f_.budget, "Sum bound for the hyperbolic normal-form search (default 30)");
    app_.add_option("--bound", f_.bound, "Entry bound for conjugator searches (default 50)");

    const auto monodromy = [&](CLI::App* sub) {
      sub->add_option("--matrix", f_.matrix, "Monodromy \"a,b;c,d\" or \"[[a,b],[c,d]]\"");
      sub->add_option("--n", f_.n, "Monodromy -T^n");
      sub->add_option("--seq", f_.seq, "Monodromy -A(d) for d = \"d1,...,dk\"");
    };
    const auto sequence = [&](CLI::App* sub) {
      sub->add_option("--seq", f_.seq, "Circular sequence \"d1,...,dk\"")->required();
    };

    monodromy(add("classify", Command::Classify, "Elliptic / parabolic / hyperbolic and trace sign"));
    monodromy(add("h1", Command::H1, "First homology of the torus bundle"));
    monodromy(add("normal-form", Command::NormalForm, "Conjugacy normal form with an explicit conjugator"));
    sequence(add("rho", Command::Rho, "Block reversal of d"));
    sequence(add("reduce", Command::Reduce, "Handle-by-handle reduction of d to (3, 2^c) with b2 ledger"));
    monodromy(add("ledger", Command::Ledger,
                  "b2 ledgers: --n N for the parabolic cobordism, --matrix/--seq for one surgery along lambda"));
    CLI::App* v = add("verdict", Command::Verdict, "Weak / strong / Stein fillability verdict");
    monodromy(v);
    v->add_option("--structure", f_.structure, "xi | xi-prime | eta (default xi)")
        ->check(CLI::IsMember({"xi", "xi-prime", "eta"}));
    v->add_option("--m", f_.m, "Twisting of xi_A, a positive odd integer (default 1)");
    sequence(add("embed-search", Command::EmbedSearch, "Search for a blowup of (0,0) below rho(d)"));
    add("divisor", Command::Divisor, "Circular divisor report")
        ->add_option("--e", f_.e, "Self-intersections \"e1,...,el\"")
        ->required();
    CLI::App* mcg = add("mcg-verify", Command::McgVerify, "Replay a twist-word derivation or test a word");
    mcg->add_option("--script", f_.script, "Derivation file");
    mcg->add_option("--word", f_.word, "Twist word, e.g. \"d1 d2 a1^-6 a2^-2\"");
  }

  Request parse(const std::vector<std::string>& args) {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app_.parse(rev);
    } catch (const CLI::CallForHelp&) {
      throw UsageError("help", help_text());
    } catch (const CLI::ParseError& e) {
      throw UsageError(e.what(), help_text());
    }
    Request req;
    req.command = command_;
    req.format = f_.json ? Format::Json : Format::Text;
    if (f_.budget) {
      if (*f_.budget < 1) usage("--budget must be positive");
      req.options.budget.seq_sum = *f_.budget;
    }
    if (f_.bound) {
      if (*f_.bound < 1) usage("--bound must be positive");
      req.options.budget.conjugator_bound = *f_.bound;
    }
    try {
      req.payload = payload();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Parse && e.kind() != ErrorKind::NotSL2 && e.kind() != ErrorKind::NotHyperbolicShape)
        throw;
      usage(e.detail());
    }
    return req;
  }

 private:
  CLI::App* add(const std::string& name, Command c, const std::string& desc) {
    CLI::App* sub = app_.add_subcommand(name, desc);
    sub->callback([this, c] { command_ = c; });
    return sub;
  }

  std::string help_text() const {
    const CLI::App* sub = nullptr;
    for (const CLI::App* s : app_.get_subcommands()) sub = s;
    return sub ? sub->help() : app_.help();
  }

  [[noreturn]] void usage(const std::string& why) const { throw UsageError(why, help_text()); }

  Mat2 monodromy() const {
    const int given = int(f_.matrix.has_value()) + int(f_.n.has_value()) + int(f_.seq.has_value());
    if (given != 1) usage("give exactly one of --matrix, --n, --seq");
    if (f_.matrix) return parse_mat2(*f_.matrix);
    if (f_.n) return -pow(mat2::T, *f_.n);
    const DSeq d = parse_dseq(*f_.seq);
    if (!is_hyperbolic_shape(d)) usage("--seq needs entries >= 2 with at least one >= 3");
    return -eval_a(d);
  }

  DSeq sequence() const {
    const DSeq d = parse_dseq(*f_.seq);
    if (!is_hyperbolic_shape(d)) usage("--seq needs entries >= 2 with at least one >= 3");
    return d;
  }

  Payload payload() const {
    if (command_ != Command::Verdict && (f_.structure || f_.m)) usage("--structure and --m belong to verdict");
    switch (command_) {
      case Command::Classify:
      case Command::H1:
      case Command::NormalForm:
        return monodromy();
      case Command::Rho:
      case Command::Reduce:
      case Command::EmbedSearch:
        return sequence();
      case Command::Ledger:
        if (f_.n && !f_.matrix && !f_.seq) return ParabolicLedgerInput{*f_.n};
        return HyperbolicLedgerInput{monodromy()};
      case Command::Verdict:
        return descriptor();
      case Command::Divisor: {
        std::vector<Int> e;
        std::stringstream in(*f_.e);
        std::string tok;
        while (std::getline(in, tok, ',')) {
          try {
            std::size_t used = 0;
            e.push_back(std::stoll(tok, &used));
            if (tok.find_first_not_of(" \t", used) != std::string::npos) usage("bad entry '" + tok + "' in --e");
          } catch (const std::logic_error&) {
            usage("bad entry '" + tok + "' in --e");
          }
        }
        return DivisorInput{e};
      }
      case Command::McgVerify: {
        if (f_.script.has_value() == f_.word.has_value()) usage("give exactly one of --script, --word");
        McgInput in;
        in.script_path = f_.script;
        if (f_.word) in.word = parse_word(*f_.word);
        return in;
      }
    }
    usage("unknown subcommand");
  }

  ContactDescriptor descriptor() const {
    const std::string s = f_.structure.value_or("xi");
    if (s == "xi") {
      const Int m = f_.m.value_or(1);
      if (m < 1 || m % 2 == 0) usage("--m must be a positive odd integer, got " + std::to_string(m));
      return XiA{monodromy(), m};
    }
    if (f_.m) usage("--m applies to --structure xi only");
    if (!f_.n || f_.matrix || f_.seq) usage("--structure " + s + " takes --n only");
    if (s == "xi-prime") return XiPrime{*f_.n};
    return Eta{*f_.n};
  }

  CLI::App app_;
  Flags f_;
  Command command_ = Command::Classify;
};

std::string yn(Answer a) { return std::string(to_string(a)); }

Report run_classify(const Mat2& a) {
  Report r;
  require_sl2(a, "monodromy");
  const BundleClass cls = classify(a);
  r.result = to_json(cls);
  r.result["monodromy"] = to_json(a);
  r.text.push_back(format_mat2(a) + ": " + std::string(to_string(cls.kind)) + ", trace " + std::to_string(cls.trace) +
                   " (" + std::string(to_string(cls.sign)) + ")");
  return r;
}

Report run_h1(const Mat2& a) {
  Report r;
  require_sl2(a, "monodromy");
  const AbelianGroup g = h1_torus_bundle(a);
  r.result = to_json(g);
  r.result["annihilator"] = torsion_annihilator(a);
  r.text.push_back("H_1 = " + format_group(g));
  return r;
}

Report run_normal_form(const Mat2& a, const DecomposeBudget& budget) {
  Report r;
  require_sl2(a, "monodromy");
  const BundleClass cls = classify(a);
  r.result["class"] = to_json(cls);
  if (cls.kind == BundleKind::Parabolic) {
    const ParabolicNF nf = parabolic_normal_form(a);
    r.result["form"] = "parabolic";
    r.result["normal_form"] = to_json(nf);
    r.text.push_back(format_mat2(a) + " ~ " + std::string(nf.sign < 0 ? "-" : "") + "T^" + std::to_string(nf.n) +
                     " via X = " + format_mat2(nf.conjugator));
    return r;
  }
  if (cls.kind == BundleKind::Elliptic)
    throw Error(ErrorKind::NotHyperbolicShape, "normal forms cover parabolic and hyperbolic monodromies only");
  const int sign = cls.sign == TraceSign::Negative ? -1 : 1;
  const auto nf = decompose_negative_hyperbolic(sign < 0 ? a : -a, budget);
  r.result["form"] = "hyperbolic";
  r.result["sign"] = sign;
  if (!nf) {
    r.result["normal_form"] = nullptr;
    r.warnings.push_back("no d with sum <= " + std::to_string(budget.seq_sum) + " found; raise --budget");
    r.text.push_back("Unknown: budget exhausted");
    r.exit_code = kExitUnknown;
    return r;
  }
  r.result["normal_form"] = to_json(*nf);
  r.result["blocks"] = to_json(parse_blocks(nf->d));
  r.text.push_back(format_mat2(a) + " ~ " + std::string(sign < 0 ? "-" : "") + "A(" + format_dseq(nf->d) +
                   ") via X = " + format_mat2(nf->conjugator));
  r.text.push_back("blocks " + format_blocks(parse_blocks(nf->d)));
  return r;
}

Report run_rho(const DSeq& d) {
  Report r;
  const DSeq out = rho(d);
  r.result["d"] = to_json(d);
  r.result["blocks"] = to_json(parse_blocks(d));
  r.result["rho"] = to_json(out);
  r.result["rho_blocks"] = to_json(parse_blocks(out));
  r.text.push_back("rho(" + format_dseq(d) + ") = (" + format_dseq(out) + ")");
  r.text.push_back("blocks " + format_blocks(parse_blocks(d)) + " -> " + format_blocks(parse_blocks(out)));
  return r;
}

Report run_reduce(const DSeq& d) {
  Report r;
  const CobordismReduction red = cobordism_reduce(d);
  const Theorem14Ledger led = theorem14_ledger(d);
  r.result["reduction"] = to_json(red);
  r.result["ledger"] = to_json(led);
  r.citations.push_back(cite::kTheorem14);
  for (const CobordismStage& s : red.stages)
    r.text.push_back("(" + format_dseq(s.from) + ") --" + std::to_string(s.handles) + " handles--> (" +
                     format_dseq(s.to) + ")");
  r.text.push_back("total handles " + std::to_string(red.total_handles) + ", b2- >= " +
                   std::to_string(red.ledger.b2minus) + ", final (" + format_dseq(red.final) + ")");
  r.text.push_back(std::string(led.passes ? "passes" : "fails") + ": " + std::to_string(led.lower) +
                   (led.passes ? " <= " : " > ") + std::to_string(led.upper));
  return r;
}

Report run_ledger(const Payload& p) {
  Report r;
  if (const auto* in = std::get_if<ParabolicLedgerInput>(&p)) {
    const ParabolicCobordism w = w_ledger_parabolic(in->n);
    r.result = to_json(w);
    r.citations.push_back(cite::kTheorem11);
    r.text.push_back("W: (M_" + std::to_string(in->n) + ") -> (M_-4), (b2+, b2-) = (" + std::to_string(w.ledger.b2plus) +
                     ", " + std::to_string(w.ledger.b2minus) + ")");
    return r;
  }
  const Mat2 a = std::get<HyperbolicLedgerInput>(p).monodromy;
  require_sl2(a, "monodromy");
  const SelfIntersection si = self_intersection_S(a);
  const BettiLedger l = wprime_ledger_hyperbolic(a);
  r.result["ledger"] = to_json(l);
  r.result["self_intersection"] = Json{{"value", si.value}, {"trace", si.trace}, {"trace_after", si.trace_after}};
  r.citations.push_back(cite::kTheorem14);
  r.text.push_back("W': one surgery along lambda, (b2+, b2-) = (" + std::to_string(l.b2plus) + ", " +
                   std::to_string(l.b2minus) + "), [S].[S] = " + std::to_string(si.value));
  return r;
}

Report run_verdict(const ContactDescriptor& desc, const VerdictOptions& opts) {
  Report r;
  const Verdict v = verdict(desc, opts);
  r.result["structure"] = describe(desc);
  r.result["verdict"] = to_json(v);
  r.citations = v.citations;
  r.text.push_back(describe(desc));
  r.text.push_back("weak: " + yn(v.weak()) + "  strong: " + yn(v.strong()) + "  stein: " + yn(v.stein()));
  for (const auto& c : v.citations) r.text.push_back("  " + c);
  for (const auto& n : v.notes) r.text.push_back("  note: " + n);
  if (v.any_unknown()) r.exit_code = kExitUnknown;
  return r;
}

Report run_embed(const DSeq& d) {
  Report r;
  const EmbeddingResult e = embeddable_sufficient(d);
  r.result = to_json(e);
  if (!e.citation.empty()) r.citations.push_back(e.citation);
  std::string line = std::string(to_string(e.kind)) + ", rho(d) = (" + format_dseq(e.target) + ")";
  if (e.witness) {
    std::string edges;
    for (const std::size_t k : e.witness->edges) edges += (edges.empty() ? "" : ",") + std::to_string(k);
    line += ", blowups at edges [" + edges + "] reach (" + format_dseq(e.witness->reached) + ")";
  }
  r.text.push_back(line);
  if (e.kind == EmbeddingKind::NoneFound)
    r.warnings.push_back("sufficient test failed; this is not a non-fillability claim");
  return r;
}

Report run_divisor(const DivisorInput& in) {
  Report r;
  const DivisorReport d = universally_tight_divisor_report(in.e);
  r.result = to_json(d);
  r.citations = d.citations;
  r.text.push_back("det Q = " + std::to_string(d.form_det) + ", A = " + format_mat2(d.monodromy) + ", trace " +
                   std::to_string(d.bundle.trace) + ", " + d.branch);
  r.text.push_back("boundary contact structure: universally tight");
  if (!d.bridge_holds) r.warnings.push_back("|det Q| != |2 - tr A|: " + d.branch);
  return r;
}

Report run_mcg(const McgInput& in) {
  Report r;
  if (in.word) {
    const TwistWord& w = *in.word;
    const PositivityResult pos = is_positive_factorization(w);
    r.result["word"] = format_word(w);
    r.result["positivity"] = to_json(pos);
    r.result["shadow"] = to_json(homological_shadow(w));
    r.text.push_back(format_word(w));
    if (const auto* p = std::get_if<Positive>(&pos))
      r.text.push_back("Positive, " + std::to_string(p->blocks.size()) + " blocks");
    else
      r.text.push_back("NotRecognized");
    return r;
  }
  std::ifstream file(*in.script_path);
  if (!file) throw Error(ErrorKind::Parse, "cannot read " + *in.script_path);
  std::stringstream buf;
  buf << file.rdbuf();
  const Derivation d = parse_derivation(buf.str());
  const DerivationResult res = verify_derivation(d.start, d.script, d.checkpoints);
  r.result = to_json(res);
  r.result["moves"] = d.script.size();
  r.result["checkpoints"] = d.checkpoints.size();
  if (const auto* f = std::get_if<Failed>(&res)) {
    r.text.push_back("Failed at step " + std::to_string(f->step) + ": " + f->reason);
    r.exit_code = kExitDomain;
  } else {
    r.text.push_back("Verified: " + std::to_string(d.script.size()) + " moves, " +
                     std::to_string(d.checkpoints.size()) + " checkpoints");
    if (!d.checkpoints.empty()) {
      const PositivityResult pos = is_positive_factorization(d.checkpoints.back());
      r.result["final_positivity"] = to_json(pos);
      if (const auto* p = std::get_if<Positive>(&pos))
        r.text.push_back("final checkpoint: Positive, " + std::to_string(p->blocks.size()) + " blocks");
    }
  }
  return r;
}

}  // namespace

Json Report::to_json() const {
  Json j;
  j["command"] = cli::to_string(command);
  j["result"] = result;
  j["citations"] = citations;
  j["warnings"] = warnings;
  return j;
}

Request parse_request(const std::vector<std::string>& args) { return Parser().parse(args); }

Report run(const Request& req) {
  Report r;
  const Payload& p = req.payload;
  switch (req.command) {
    case Command::Classify: r = run_classify(std::get<Mat2>(p)); break;
    case Command::H1: r = run_h1(std::get<Mat2>(p)); break;
    case Command::NormalForm: r = run_normal_form(std::get<Mat2>(p), req.options.budget); break;
    case Command::Rho: r = run_rho(std::get<DSeq>(p)); break;
    case Command::Reduce: r = run_reduce(std::get<DSeq>(p)); break;
    case Command::Ledger: r = run_ledger(p); break;
    case Command::Verdict: r = run_verdict(std::get<ContactDescriptor>(p), req.options); break;
    case Command::EmbedSearch: r = run_embed(std::get<DSeq>(p)); break;
    case Command::Divisor: r = run_divisor(std::get<DivisorInput>(p)); break;
    case Command::McgVerify: r = run_mcg(std::get<McgInput>(p)); break;
  }
  r.command = req.command;
  return r;
}

std::string render(const Report& report, Format format) {
  if (format == Format::Json) return report.to_json().dump(2) + "\n";
  std::string out;
  for (const auto& line : report.text) out += line + "\n";
  if (report.command != Command::Verdict)
    for (const auto& c : report.citations) out += "  " + c + "\n";
  for (const auto& w : report.warnings) out += "warning: " + w + "\n";
  return out;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request req;
  try {
    req = parse_request(args);
  } catch (const UsageError& e) {
    if (std::string_view(e.what()) == "help") {
      out << e.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n" << e.help();
    return kExitUsage;
  }
  try {
    const Report r = run(req);
    out << render(r, req.format);
    return r.exit_code;
  } catch (const Error& e) {
    if (req.format == Format::Json) {
      Json j;
      j["command"] = to_string(req.command);
      j["error"] = Json{{"kind", torusfill::to_string(e.kind())}, {"detail", e.detail()}};
      out << j.dump(2) << "\n";
    }
    err << "error: " << torusfill::to_string(e.kind()) << ": " << e.detail() << "\n";
    return kExitDomain;
  }
}

}  // namespace torusfill::cli
