// Copyright 2026 The sesqui Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "sesqui/analysis.hpp"
#include "sesqui/blocksub.hpp"
#include "sesqui/errors.hpp"
#include "sesqui/induce.hpp"
#include "sesqui/numeration.hpp"
#include "sesqui/rulefile.hpp"
#include "sesqui/sequences.hpp"

namespace sesqui::cli {

namespace {

/// Invalid option values or combinations found after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything the subcommands can be configured with.
struct Config {
  std::string base = "3/2";
  std::string variant = "sq";
  std::string format = "plain";
  std::string method = "direct";
  std::vector<std::string> items;
  bool strict = false;

  std::string sequence;
  std::size_t count = 0;
  std::optional<std::uint64_t> modulus;

  std::string rules;
  std::string seed;
  std::string word;

  std::size_t stride = 1;
  std::string labels = "sorted";
  std::size_t prefix_len = 10000;
  std::string code2;
  std::size_t verify = 0;

  std::size_t m = 0;
  std::size_t m_max = 20;
  std::string closure_kind = "both";
  std::string words;
  double tolerance = 0.005;
  std::string bound;
  bool machine_only = false;
};

Base parse_base(const std::string& text) {
  try {
    return Base::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Variant parse_variant(const std::string& text) {
  if (text == "sq") return Variant::sq;
  if (text == "afs") return Variant::afs;
  throw UsageError("unknown variant '" + text + "' (expected sq or afs)");
}

Natural parse_natural(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw UsageError("'" + text + "' is not a natural number");
  return Natural(text);
}

/// Calls visit for every number in "N" or "A..B" items, in order.
template <class Visit>
void for_each_number(const std::vector<std::string>& items, Visit visit) {
  for (const auto& item : items) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      visit(parse_natural(item));
      continue;
    }
    const Natural first = parse_natural(item.substr(0, dots));
    const Natural last = parse_natural(item.substr(dots + 2));
    if (last < first) throw UsageError("empty range '" + item + "'");
    for (Natural n = first; n <= last; ++n) visit(n);
  }
}

std::string show(const DigitString& d) { return d.empty() ? "ε" : d.to_string(); }

std::string show(const Exponent& e) {
  return std::to_string(e.numerator()) + "/" + std::to_string(e.denominator());
}

Exponent parse_exponent(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Exponent(std::stoll(text));
    return Exponent(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw UsageError("invalid rational '" + text + "'");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string fixed(double v) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s << std::fixed << std::setprecision(9) << v;
  return s.str();
}

// ---------------------------------------------------------------- encode

int cmd_encode(const Config& cfg, std::ostream& out) {
  const Base base = parse_base(cfg.base);
  const Variant variant = parse_variant(cfg.variant);
  const bool indexed = cfg.format == "bfile";
  if (!indexed && cfg.format != "plain") throw UsageError("encode supports --format plain or bfile");
  for_each_number(cfg.items, [&](const Natural& n) {
    const DigitString d = variant == Variant::sq ? encode(n, base) : encode_afs(n, base);
    if (indexed) out << n << ' ';
    out << show(d) << '\n';
  });
  return kOk;
}

int cmd_decode(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Base base = parse_base(cfg.base);
  const Variant variant = parse_variant(cfg.variant);
  int status = kOk;
  for (const auto& item : cfg.items) {
    DigitString d;
    try {
      d = DigitString::parse(item, base, variant);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    try {
      out << decode(d, {cfg.strict}) << '\n';
    } catch (const NotNatural& e) {
      const std::string line = "not-natural digits=" + show(d) + " value=" + e.numerator() + "/" +
                               e.denominator();
      if (cfg.strict) {
        err << line << '\n';
        status = kDataError;
      } else {
        out << line << '\n';
      }
    } catch (const NonCanonical& e) {
      err << "non-canonical digits=" << show(d) << '\n';
      status = kDataError;
    }
  }
  return status;
}

// ---------------------------------------------------------------- seq

class TermWriter {
 public:
  TermWriter(std::ostream& out, const std::string& format) : out_(out), format_(format) {
    if (format != "plain" && format != "bfile" && format != "csv" && format != "json-lines")
      throw UsageError("unknown format '" + format + "'");
    if (format_ == "csv") out_ << "n,value\n";
  }

  void write(std::uint64_t index, const std::string& value) {
    if (format_ == "plain") {
      if (index > 0) out_ << ", ";
      out_ << value;
    } else if (format_ == "bfile") {
      out_ << index << ' ' << value << '\n';
    } else if (format_ == "csv") {
      out_ << index << ',' << value << '\n';
    } else {
      out_ << "{\"n\":" << index << ",\"value\":" << value << "}\n";
    }
    written_ = true;
  }

  void finish() {
    if (format_ == "plain" && written_) out_ << '\n';
  }

 private:
  std::ostream& out_;
  std::string format_;
  bool written_ = false;
};

int cmd_seq(const Config& cfg, std::ostream& out) {
  const auto name = parse_sequence_name(cfg.sequence);
  if (!name) throw UsageError("unknown sequence '" + cfg.sequence + "'");
  if (cfg.count < 1) throw UsageError("-n must be at least 1");
  const SequenceSpec spec{*name, parse_base(cfg.base)};
  TermWriter writer(out, cfg.format);

  if (*name == SequenceName::sq_digits) {
    for (std::uint64_t i = 0; i < cfg.count; ++i) writer.write(i, encode(i, spec.base).to_string());
  } else if (cfg.method == "direct") {
    for (std::uint64_t i = 0; i < cfg.count; ++i) {
      std::uint64_t v = 0;
      switch (*name) {
        case SequenceName::s32: v = digit_sum(i, spec.base); break;
        case SequenceName::t32: v = digit_sum(i, spec.base, 2); break;
        default: v = digit_sum_afs(i, spec.base, 2); break;
      }
      writer.write(i, std::to_string(v));
    }
  } else if (cfg.method == "fixpoint") {
    const auto terms = generated_prefix(spec, cfg.count);
    for (std::uint64_t i = 0; i < terms.size(); ++i) writer.write(i, std::to_string(terms[i]));
  } else {
    throw UsageError("unknown method '" + cfg.method + "' (expected direct or fixpoint)");
  }
  writer.finish();
  return kOk;
}

// ---------------------------------------------------------------- subst

RuleFile load_rules(const Config& cfg) {
  if (cfg.rules.empty()) throw UsageError("--rules is required");
  return read_rule_file(cfg.rules);
}

Word parse_word(const Alphabet& alphabet, const std::string& text) {
  try {
    return alphabet.parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Word seed_for(const BlockSubstitution& sub, const std::string& text) {
  if (!text.empty()) return parse_word(sub.alphabet(), text);
  auto seed = find_seed(sub);
  if (!seed) throw NotFixed("no word of the minimal growing length is a prefix of its image; give --seed");
  return *seed;
}

int cmd_subst_apply(const Config& cfg, std::ostream& out) {
  const RuleFile file = load_rules(cfg);
  const auto& sub = file.substitution;
  const Word w = parse_word(sub.alphabet(), cfg.word);
  out << sub.alphabet().format(sesqui::apply(sub, std::span<const Symbol>(w))) << '\n';
  return kOk;
}

int cmd_subst_fixpoint(const Config& cfg, std::ostream& out) {
  const RuleFile file = load_rules(cfg);
  const auto& sub = file.substitution;
  const Word seed = seed_for(sub, cfg.seed);
  out << sub.alphabet().format(fixed_point_prefix(sub, std::span<const Symbol>(seed), cfg.count))
      << '\n';
  return kOk;
}

// ---------------------------------------------------------------- induce

int cmd_induce(const Config& cfg, std::ostream& out) {
  const RuleFile file = load_rules(cfg);
  const auto& sub = file.substitution;
  if (cfg.stride < 1) throw UsageError("-r must be at least 1");
  FactorOrder order = FactorOrder::sorted;
  if (cfg.labels == "first") order = FactorOrder::first_occurrence;
  else if (cfg.labels != "sorted") throw UsageError("--labels must be sorted or first");

  const Word seed = seed_for(sub, cfg.seed);
  std::size_t needed = cfg.prefix_len;
  if (cfg.verify > 0) needed = std::max(needed, cfg.stride * (cfg.verify - 1) + 1);
  const Word x = fixed_point_prefix(sub, std::span<const Symbol>(seed), needed);

  InducedSystem sys = induce(sub, cfg.stride, x, cfg.prefix_len, order);
  if (!cfg.code2.empty()) {
    try {
      sys.extra = parse_coding(cfg.code2, sys.induced.alphabet());
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  std::vector<std::string> comments;
  comments.push_back("induced from stride " + std::to_string(cfg.stride) + " on the fixed point with seed " +
                     sub.alphabet().format(seed) + ", witness prefix " +
                     std::to_string(sys.witness_length));
  int status = kOk;
  if (cfg.verify > 0) {
    const auto report = verify_subsequence(sys, x, cfg.verify);
    comments.push_back("verify checked=" + std::to_string(report.checked) +
                       " mismatches=" + std::to_string(report.mismatch_count) +
                       " equal=" + (report.equal() ? "true" : "false"));
    if (!report.equal()) status = kDataError;
  }

  if (sys.extra) {
    const BlockSubstitution coded = code_substitution(sys.induced, *sys.extra);
    comments.push_back("induced substitution under the coding " + cfg.code2);
    out << format_rule_file(coded, {}, comments);
    return status;
  }

  const auto& bl = sys.aligned_blow_up;
  comments.push_back("blow-up " + std::to_string(bl.input_length()) + " " +
                     std::to_string(bl.output_length()) + " on aligned factors:");
  for (const auto& rule : bl.rules())
    comments.push_back("  " + bl.alphabet().format(rule.input) + " " + bl.alphabet().format(rule.output));
  std::vector<std::pair<std::string, std::string>> codes;
  for (std::size_t i = 0; i < sys.factors.size(); ++i)
    codes.emplace_back(sub.alphabet().format(sys.factors[i]),
                       sys.induced.alphabet().name(static_cast<Symbol>(i)));
  out << format_rule_file(sys.induced, codes, comments);
  return status;
}

// ---------------------------------------------------------------- analyze

struct Source {
  std::string label;
  Alphabet alphabet;
  Word x;
  bool is_t32 = false;
};

Source load_source(const Config& cfg) {
  if (cfg.count < 2) throw UsageError("-n must be at least 2");
  if (!cfg.rules.empty()) {
    const RuleFile file = load_rules(cfg);
    const Word seed = seed_for(file.substitution, cfg.seed);
    return {cfg.rules, file.substitution.alphabet(),
            fixed_point_prefix(file.substitution, std::span<const Symbol>(seed), cfg.count), false};
  }
  const auto name = parse_sequence_name(cfg.sequence);
  if (!name) throw UsageError("give a binary sequence name (t32, ttilde) or --rules");
  if (*name != SequenceName::t32 && *name != SequenceName::ttilde)
    throw UsageError("analyze works on the binary sequences t32 and ttilde");
  const SequenceSpec spec{*name, parse_base(cfg.base)};
  return {std::string(to_string(*name)), Alphabet::binary(), generated_word(spec, cfg.count),
          *name == SequenceName::t32 && spec.base == Base::sesquinary()};
}

std::vector<Word> parse_words(const Config& cfg, const Alphabet& alphabet) {
  std::vector<Word> words;
  for (const auto& w : split_list(cfg.words)) words.push_back(parse_word(alphabet, w));
  if (words.empty()) throw UsageError("-w needs at least one word");
  return words;
}

int analyze_factors(const Config& cfg, const Source& src, std::ostream& out) {
  if (cfg.m < 1 || cfg.m > src.x.size()) throw UsageError("-m must be in 1..n");
  const FactorSet fs = factors(src.x, cfg.m);
  if (!cfg.machine_only) {
    out << "length-" << cfg.m << " factors of " << src.label << " (n=" << src.x.size()
        << "): " << fs.size() << '\n';
    for (std::size_t k = 0; k < fs.size(); ++k)
      out << "  " << src.alphabet.format(fs.words[k]) << "  first at " << fs.first_position[k] << '\n';
  }
  out << "record=factors source=" << src.label << " n=" << src.x.size() << " m=" << cfg.m
      << " count=" << fs.size() << '\n';
  for (std::size_t k = 0; k < fs.size(); ++k)
    out << "record=factor m=" << cfg.m << " word=" << src.alphabet.format(fs.words[k])
        << " first=" << fs.first_position[k] << '\n';
  return kOk;
}

int analyze_closure(const Config& cfg, const Source& src, std::ostream& out) {
  if (cfg.m_max < 1 || cfg.m_max > src.x.size()) throw UsageError("--m-max must be in 1..n");
  std::vector<ClosureKind> kinds;
  if (cfg.closure_kind == "complement" || cfg.closure_kind == "both")
    kinds.push_back(ClosureKind::complement);
  if (cfg.closure_kind == "reversal" || cfg.closure_kind == "both")
    kinds.push_back(ClosureKind::reversal);
  if (kinds.empty()) throw UsageError("--kind must be complement, reversal or both");

  int status = kOk;
  for (auto kind : kinds) {
    const ClosureReport report = kind == ClosureKind::complement
                                     ? check_complement_closure(src.x, cfg.m_max)
                                     : check_reversal_closure(src.x, cfg.m_max);
    if (!cfg.machine_only) {
      out << to_string(kind) << " closure of " << src.label << " (n=" << report.prefix_length
          << ", evidence only)\n";
      for (const auto& level : report.levels)
        out << "  m=" << std::setw(3) << level.length << "  factors=" << std::setw(7)
            << level.factor_count << "  "
            << (level.closed() ? "closed" : std::to_string(level.unconfirmed.size()) + " unconfirmed")
            << '\n';
    }
    for (const auto& level : report.levels) {
      out << "record=closure kind=" << to_string(kind) << " m=" << level.length
          << " factors=" << level.factor_count << " unconfirmed=" << level.unconfirmed.size() << '\n';
      for (const auto& v : level.unconfirmed)
        out << "record=unconfirmed kind=" << to_string(kind) << " m=" << level.length
            << " word=" << src.alphabet.format(v.word) << " first=" << v.first_position << '\n';
    }
    const bool clean = report.closed();
    out << "record=closure-summary kind=" << to_string(kind) << " n=" << report.prefix_length
        << " m_max=" << cfg.m_max << " unconfirmed=" << report.unconfirmed_count()
        << " status=" << (clean ? "no-violation-up-to-n" : "violation") << '\n';
    if (!clean) status = kViolation;
  }
  return status;
}

int analyze_freq(const Config& cfg, const Source& src, std::ostream& out) {
  const auto words = parse_words(cfg, src.alphabet);
  const bool binary = src.alphabet.size() == 2;
  int status = kOk;
  if (!cfg.machine_only) out << "word  count  windows  estimate\n";
  for (const auto& w : words) {
    const FrequencyReport f = frequencies(src.x, {w}).front();
    if (!cfg.machine_only)
      out << src.alphabet.format(w) << "  " << f.count << "  " << f.windows << "  "
          << fixed(f.estimate()) << '\n';
    out << "record=frequency word=" << src.alphabet.format(w) << " n=" << f.prefix_length
        << " count=" << f.count << " windows=" << f.windows << " estimate=" << fixed(f.estimate());
    if (binary) {
      const auto pair = paired_frequencies(src.x, {w}).front();
      out << " complement=" << src.alphabet.format(pair.complement.word)
          << " complement_estimate=" << fixed(pair.complement.estimate())
          << " complement_delta=" << fixed(pair.complement_delta())
          << " reversal=" << src.alphabet.format(pair.reversal.word)
          << " reversal_estimate=" << fixed(pair.reversal.estimate())
          << " reversal_delta=" << fixed(pair.reversal_delta());
    }
    out << '\n';

    if (src.is_t32) {
      std::optional<double> target;
      std::string target_text;
      if (w == Word{0, 0}) {
        target = 0.1;
        target_text = "1/10";
      } else if (w == Word{0, 1}) {
        target = 0.4;
        target_text = "4/10";
      }
      if (target) {
        const double deviation = std::abs(f.estimate() - *target);
        const bool within = deviation <= cfg.tolerance;
        out << "record=target word=" << src.alphabet.format(w) << " target=" << target_text
            << " tolerance=" << fixed(cfg.tolerance) << " deviation=" << fixed(deviation)
            << " status=" << (within ? "within" : "outside") << '\n';
        if (!within) status = kViolation;
      }
    }
  }
  return status;
}

int analyze_gaps(const Config& cfg, const Source& src, std::ostream& out) {
  if (!cfg.words.empty()) {
    for (const auto& w : parse_words(cfg, src.alphabet)) {
      const GapReport g = gaps(src.x, w);
      if (!cfg.machine_only)
        out << src.alphabet.format(w) << ": " << g.count() << " occurrences, max gap "
            << (g.max_gap ? std::to_string(*g.max_gap) : "undefined") << '\n';
      out << "record=gaps word=" << src.alphabet.format(w) << " n=" << src.x.size()
          << " count=" << g.count()
          << " max_gap=" << (g.max_gap ? std::to_string(*g.max_gap) : "undefined") << '\n';
    }
    return kOk;
  }
  if (cfg.m < 1 || cfg.m > src.x.size()) throw UsageError("gaps needs -w words or -m length");
  for (std::size_t m = 1; m <= cfg.m; ++m)
    for (const auto& g : factor_gaps(src.x, m))
      out << "record=gap m=" << m << " word=" << src.alphabet.format(g.word) << " n=" << src.x.size()
          << " count=" << g.count
          << " max_gap=" << (g.max_gap ? std::to_string(*g.max_gap) : "undefined") << '\n';
  return kOk;
}

int analyze_exponent(const Config& cfg, const Source& src, std::ostream& out) {
  const RepetitionReport r = critical_exponent(src.x);
  std::optional<Exponent> bound;
  if (!cfg.bound.empty()) bound = parse_exponent(cfg.bound);
  else if (src.is_t32) bound = Exponent(5);

  const auto& w = r.witness;
  std::string factor = src.alphabet.format(std::span<const Symbol>(src.x).subspan(w.start, w.length));
  if (factor.size() > 200) factor = factor.substr(0, 200) + "...";
  if (!cfg.machine_only)
    out << "max exponent over " << src.label << " (n=" << r.prefix_length << "): "
        << show(r.max_exponent) << " from " << factor << " at " << w.start << " (period "
        << w.period << ")\n";
  out << "record=exponent source=" << src.label << " n=" << r.prefix_length
      << " runs=" << r.runs.size() << " max=" << show(r.max_exponent)
      << " witness_start=" << w.start << " witness_period=" << w.period
      << " witness_length=" << w.length << " witness=" << factor;
  int status = kOk;
  if (bound) {
    const bool within = r.max_exponent <= *bound;
    out << " bound=" << show(*bound) << " attains_bound=" << (r.max_exponent == *bound ? "true" : "false")
        << " status=" << (within ? "bounded-up-to-n" : "violation");
    if (!within) status = kViolation;
  }
  out << '\n';
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Rational-base numeration, block substitutions and their fixed points", "sesqui"};
  app.set_config("--config", "", "Read options from a key=value file");
  app.require_subcommand(1);

  const auto add_base = [&](CLI::App* sub) {
    sub->add_option("--base", cfg.base, "Base p/q")->capture_default_str();
  };

  auto* encode_cmd = app.add_subcommand("encode", "Print representations of numbers or ranges A..B");
  add_base(encode_cmd);
  encode_cmd->add_option("--variant", cfg.variant, "sq or afs")->capture_default_str();
  encode_cmd->add_option("--format", cfg.format, "plain or bfile")->capture_default_str();
  encode_cmd->add_option("items", cfg.items, "Numbers N or ranges A..B")->required();

  auto* decode_cmd = app.add_subcommand("decode", "Evaluate digit strings");
  add_base(decode_cmd);
  decode_cmd->add_option("--variant", cfg.variant, "sq or afs")->capture_default_str();
  decode_cmd->add_flag("--strict", cfg.strict, "Reject leading zeros; exit 1 on invalid strings");
  decode_cmd->add_option("digits", cfg.items, "Digit strings")->required();

  auto* seq_cmd = app.add_subcommand("seq", "Print sequence terms from index 0");
  add_base(seq_cmd);
  seq_cmd->add_option("name", cfg.sequence, "sq-digits, s32, t32 or ttilde")->required();
  seq_cmd->add_option("-n", cfg.count, "Number of terms")->required();
  seq_cmd->add_option("--format", cfg.format, "plain, bfile, csv or json-lines")->capture_default_str();
  seq_cmd->add_option("--method", cfg.method, "direct or fixpoint")->capture_default_str();

  auto* subst_cmd = app.add_subcommand("subst", "Apply a rule file or grow its fixed point");
  subst_cmd->require_subcommand(1);
  auto* apply_cmd = subst_cmd->add_subcommand("apply", "Apply the substitution to a word");
  apply_cmd->add_option("--rules", cfg.rules, "Rule file")->required();
  apply_cmd->add_option("word", cfg.word, "Input word")->required();
  auto* fix_cmd = subst_cmd->add_subcommand("fixpoint", "Prefix of the fixed point");
  fix_cmd->add_option("--rules", cfg.rules, "Rule file")->required();
  fix_cmd->add_option("--seed", cfg.seed, "Seed word (default: smallest valid seed)");
  fix_cmd->add_option("-n", cfg.count, "Number of letters")->required();

  auto* induce_cmd = app.add_subcommand("induce", "Substitution behind the stride-r subsequence");
  induce_cmd->add_option("--rules", cfg.rules, "Rule file")->required();
  induce_cmd->add_option("-r", cfg.stride, "Stride")->required();
  induce_cmd->add_option("--labels", cfg.labels, "sorted or first")->capture_default_str();
  induce_cmd->add_option("--prefix-len", cfg.prefix_len, "Witness prefix length")->capture_default_str();
  induce_cmd->add_option("--seed", cfg.seed, "Seed word of the original fixed point");
  induce_cmd->add_option("--code2", cfg.code2, "Further coding, e.g. ab=0,cd=1");
  induce_cmd->add_option("--verify", cfg.verify, "Check the first n subsequence terms");

  auto* analyze_cmd = app.add_subcommand("analyze", "Empirical reports on a fixed-point prefix");
  analyze_cmd->require_subcommand(1);
  const auto add_source = [&](CLI::App* sub) {
    add_base(sub);
    sub->add_option("name", cfg.sequence, "t32 or ttilde");
    sub->add_option("--rules", cfg.rules, "Rule file instead of a named sequence");
    sub->add_option("--seed", cfg.seed, "Seed word for --rules");
    sub->add_option("-n", cfg.count, "Prefix length")->required();
    sub->add_flag("--machine", cfg.machine_only, "Only print key=value records");
  };
  auto* factors_cmd = analyze_cmd->add_subcommand("factors", "Factor set of one length");
  add_source(factors_cmd);
  factors_cmd->add_option("-m", cfg.m, "Factor length")->required();
  auto* closure_cmd = analyze_cmd->add_subcommand("closure", "Complement/reversal closure");
  add_source(closure_cmd);
  closure_cmd->add_option("--m-max", cfg.m_max, "Largest factor length")->capture_default_str();
  closure_cmd->add_option("--kind", cfg.closure_kind, "complement, reversal or both")->capture_default_str();
  auto* freq_cmd = analyze_cmd->add_subcommand("freq", "Frequencies of words");
  add_source(freq_cmd);
  freq_cmd->add_option("-w", cfg.words, "Comma-separated words")->required();
  freq_cmd->add_option("--tolerance", cfg.tolerance, "Allowed deviation from conjectured values")
      ->capture_default_str();
  auto* gaps_cmd = analyze_cmd->add_subcommand("gaps", "Recurrence gaps");
  add_source(gaps_cmd);
  gaps_cmd->add_option("-w", cfg.words, "Comma-separated words");
  gaps_cmd->add_option("-m", cfg.m, "Report every factor of length <= m");
  auto* exponent_cmd = analyze_cmd->add_subcommand("exponent", "Maximal repetitions");
  add_source(exponent_cmd);
  exponent_cmd->add_option("--bound", cfg.bound, "Exponent bound to check (default 5 for t32)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*encode_cmd) return cmd_encode(cfg, out);
    if (*decode_cmd) return cmd_decode(cfg, out, err);
    if (*seq_cmd) return cmd_seq(cfg, out);
    if (*apply_cmd) return cmd_subst_apply(cfg, out);
    if (*fix_cmd) return cmd_subst_fixpoint(cfg, out);
    if (*induce_cmd) return cmd_induce(cfg, out);
    if (*analyze_cmd) {
      const Source src = load_source(cfg);
      if (*factors_cmd) return analyze_factors(cfg, src, out);
      if (*closure_cmd) return analyze_closure(cfg, src, out);
      if (*freq_cmd) return analyze_freq(cfg, src, out);
      if (*gaps_cmd) return analyze_gaps(cfg, src, out);
      return analyze_exponent(cfg, src, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}

}  // namespace sesqui::cli
