// Copyright 2026 The dpcomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpcomp/io/text_format.h"

#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <utility>

namespace dpcomp {

namespace {

constexpr std::string_view kMagic = "dpcomp-doc";
constexpr std::string_view kVersion = "v1";

void CheckLabel(const std::string& label) {
  if (label.find_first_of(" \t:=|") != std::string::npos) {
    throw Error("label '" + label +
                "' contains characters reserved by the text format");
  }
}

void WriteSpaceLine(std::ostream& out, const std::string& keyword,
                    const Space& space) {
  out << keyword;
  for (const std::string& label : space.labels()) {
    CheckLabel(label);
    out << ' ' << label;
  }
  out << '\n';
}

void WriteValue(std::ostream& out, double value) {
  out << std::setprecision(std::numeric_limits<double>::max_digits10)
      << value;
}

// Line-oriented reader with position tracking for error messages.
class LineReader {
 public:
  LineReader(std::istream& in, std::string context)
      : in_(in), context_(std::move(context)) {}

  // Next non-blank, non-comment line split into tokens; false at EOF.
  bool NextTokens(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      std::istringstream split(line);
      tokens.clear();
      std::string token;
      while (split >> token) tokens.push_back(token);
      if (tokens.empty() || tokens[0][0] == '#') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(context_ + ":" + std::to_string(line_) + ": " + message);
  }

  double ParseDouble(const std::string& token) const {
    try {
      size_t used = 0;
      const double value = std::stod(token, &used);
      if (used != token.size()) Fail("trailing characters in '" + token + "'");
      return value;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      Fail("expected a number, got '" + token + "'");
    }
  }

  int ParseInt(const std::string& token) const {
    try {
      size_t used = 0;
      const int value = std::stoi(token, &used);
      if (used != token.size()) Fail("trailing characters in '" + token + "'");
      return value;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      Fail("expected an integer, got '" + token + "'");
    }
  }

 private:
  std::istream& in_;
  std::string context_;
  int line_ = 0;
};

void ExpectHeader(LineReader& reader, const std::string& kind) {
  std::vector<std::string> tokens;
  if (!reader.NextTokens(tokens)) reader.Fail("empty document");
  if (tokens.size() != 3 || tokens[0] != kMagic || tokens[1] != kVersion ||
      tokens[2] != kind) {
    reader.Fail("expected header 'dpcomp-doc v1 " + kind + "'");
  }
}

InteractiveSystem ReadSystemBody(LineReader& reader,
                                 const std::string& section) {
  std::vector<std::string> tokens;
  std::optional<Space> queries;
  std::optional<Space> responses;
  int horizon = 0;

  if (!reader.NextTokens(tokens) || tokens[0] != "begin-system" ||
      tokens.size() != 2 || tokens[1] != section) {
    reader.Fail("expected 'begin-system " + section + "'");
  }
  std::optional<TableSystemBuilder> builder;
  while (reader.NextTokens(tokens)) {
    if (tokens[0] == "end-system") {
      if (!builder) reader.Fail("system body has no rows");
      return std::move(*builder).Build();
    }
    if (tokens[0] == "queries") {
      queries = Space({tokens.begin() + 1, tokens.end()});
      continue;
    }
    if (tokens[0] == "responses") {
      responses = Space({tokens.begin() + 1, tokens.end()});
      continue;
    }
    if (tokens[0] == "horizon") {
      if (tokens.size() != 2) reader.Fail("horizon needs one integer");
      horizon = reader.ParseInt(tokens[1]);
      continue;
    }
    if (tokens[0] == "row") {
      if (!queries || !responses || horizon < 1) {
        reader.Fail("row before queries/responses/horizon");
      }
      if (!builder) builder.emplace(*queries, *responses, horizon);
      // row <history tokens> | <query> = <probabilities>
      size_t bar = 0;
      while (bar < tokens.size() && tokens[bar] != "|") ++bar;
      if (bar == tokens.size() || bar + 2 >= tokens.size() ||
          tokens[bar + 2] != "=") {
        reader.Fail("row syntax: row <history> | <query> = <probs>");
      }
      History history;
      for (size_t i = 1; i < bar; ++i) {
        const size_t colon = tokens[i].find(':');
        if (colon == std::string::npos) {
          reader.Fail("history token '" + tokens[i] + "' is not query:response");
        }
        const int x = queries->IndexOf(tokens[i].substr(0, colon));
        const int y = responses->IndexOf(tokens[i].substr(colon + 1));
        if (x < 0 || y < 0) {
          reader.Fail("history token '" + tokens[i] + "' uses unknown labels");
        }
        history.push_back({x, y});
      }
      const int query = queries->IndexOf(tokens[bar + 1]);
      if (query < 0) reader.Fail("unknown query '" + tokens[bar + 1] + "'");
      std::vector<double> row;
      for (size_t i = bar + 3; i < tokens.size(); ++i) {
        row.push_back(reader.ParseDouble(tokens[i]));
      }
      if (static_cast<int>(row.size()) != responses->size()) {
        reader.Fail("row width does not match the response space");
      }
      try {
        builder->AddRow(history, query, std::move(row));
      } catch (const SystemError& e) {
        reader.Fail(e.what());
      }
      continue;
    }
    reader.Fail("unknown directive '" + tokens[0] + "'");
  }
  reader.Fail("unterminated system body");
}

void WriteSystemBody(std::ostream& out, const std::string& section,
                     const InteractiveSystem& system) {
  const auto* table = dynamic_cast<const TableSystem*>(&system.model());
  if (table == nullptr) {
    throw Error("only table systems can be written; materialize first");
  }
  out << "begin-system " << section << '\n';
  WriteSpaceLine(out, "queries", system.query_space());
  WriteSpaceLine(out, "responses", system.response_space());
  out << "horizon " << system.horizon() << '\n';
  for (const auto& [key, row] : table->rows()) {
    const auto& [history, query] = key;
    out << "row";
    for (const Exchange& e : history) {
      out << ' ' << system.query_space().label(e.query) << ':'
          << system.response_space().label(e.response);
    }
    out << " | " << system.query_space().label(query) << " =";
    for (double p : row) {
      out << ' ';
      WriteValue(out, p);
    }
    out << '\n';
  }
  out << "end-system\n";
}

}  // namespace

InteractiveSystem Materialize(const InteractiveSystem& system,
                              long long max_rows) {
  TableSystemBuilder builder(system.query_space(), system.response_space(),
                             system.horizon());
  long long rows = 0;
  std::function<void(History&)> walk = [&](History& prefix) {
    if (static_cast<int>(prefix.size()) >= system.horizon()) return;
    for (int x = 0; x < system.query_space().size(); ++x) {
      if (!system.QueryAvailable(prefix, x)) continue;
      if (++rows > max_rows) throw SystemError("materialization too large");
      const std::vector<double> row = system.Row(prefix, x);
      builder.AddRow(prefix, x, row);
      prefix.push_back({x, 0});
      for (int y = 0; y < static_cast<int>(row.size()); ++y) {
        if (row[y] <= 0.0) continue;
        prefix.back().response = y;
        walk(prefix);
      }
      prefix.pop_back();
    }
  };
  History prefix;
  walk(prefix);
  return std::move(builder).Build();
}

void WriteSystem(std::ostream& out, const InteractiveSystem& system) {
  out << kMagic << ' ' << kVersion << " system\n";
  WriteSystemBody(out, "m", system);
}

void WritePair(std::ostream& out, const SystemPair& pair) {
  out << kMagic << ' ' << kVersion << " pair\n";
  WriteSystemBody(out, "m0", pair.m0());
  WriteSystemBody(out, "m1", pair.m1());
}

void WriteAdversary(std::ostream& out, const Adversary& adversary,
                    const std::vector<InteractiveSystem>& systems) {
  if (static_cast<int>(systems.size()) != adversary.arity()) {
    throw Error("system list does not match the adversary arity");
  }
  out << kMagic << ' ' << kVersion << " adversary\n";
  out << "arity " << adversary.arity() << '\n';
  out << "horizon " << adversary.horizon() << '\n';
  for (const auto& [history, choice] : adversary.strategy()) {
    out << "move";
    for (const Step& step : history) {
      const InteractiveSystem& sys = systems[step.system];
      out << ' ' << (step.system + 1) << ':'
          << sys.query_space().label(step.query) << ':'
          << sys.response_space().label(step.response);
    }
    out << " | = " << (choice.system + 1) << ' '
        << systems[choice.system].query_space().label(choice.query) << '\n';
  }
}

void WriteDecomposition(std::ostream& out, const SystemPair& pair,
                        const Decomposition& decomposition) {
  out << kMagic << ' ' << kVersion << " decomposition\n";
  out << "epsilon ";
  WriteValue(out, decomposition.epsilon);
  out << "\ndelta ";
  WriteValue(out, decomposition.delta);
  out << '\n';
  WriteSystemBody(out, "m0", pair.m0());
  WriteSystemBody(out, "m1", pair.m1());
  WriteSystemBody(out, "e0", decomposition.e0);
  WriteSystemBody(out, "e1", decomposition.e1);
  WriteSystemBody(out, "n0", decomposition.n0);
  WriteSystemBody(out, "n1", decomposition.n1);
}

InteractiveSystem ReadSystem(std::istream& in, const std::string& context) {
  LineReader reader(in, context);
  ExpectHeader(reader, "system");
  return ReadSystemBody(reader, "m");
}

SystemPair ReadPair(std::istream& in, const std::string& context) {
  LineReader reader(in, context);
  ExpectHeader(reader, "pair");
  InteractiveSystem m0 = ReadSystemBody(reader, "m0");
  InteractiveSystem m1 = ReadSystemBody(reader, "m1");
  try {
    return SystemPair(std::move(m0), std::move(m1));
  } catch (const SystemError& e) {
    throw ParseError(context + ": " + e.what());
  }
}

Adversary ReadAdversary(std::istream& in, const std::string& context,
                        const std::vector<InteractiveSystem>& systems) {
  LineReader reader(in, context);
  ExpectHeader(reader, "adversary");
  std::vector<std::string> tokens;
  int arity = 0;
  int horizon = 0;
  Adversary::Strategy strategy;
  while (reader.NextTokens(tokens)) {
    if (tokens[0] == "arity") {
      arity = reader.ParseInt(tokens.at(1));
      if (arity != static_cast<int>(systems.size())) {
        reader.Fail("arity does not match the provided systems");
      }
      continue;
    }
    if (tokens[0] == "horizon") {
      horizon = reader.ParseInt(tokens.at(1));
      continue;
    }
    if (tokens[0] == "move") {
      if (arity < 1 || horizon < 1) reader.Fail("move before arity/horizon");
      size_t bar = 0;
      while (bar < tokens.size() && tokens[bar] != "|") ++bar;
      if (bar + 4 != tokens.size() || tokens[bar + 1] != "=") {
        reader.Fail("move syntax: move <history> | = <system> <query>");
      }
      Transcript history;
      for (size_t i = 1; i < bar; ++i) {
        std::istringstream token(tokens[i]);
        std::string sys_part, query_part, response_part;
        if (!std::getline(token, sys_part, ':') ||
            !std::getline(token, query_part, ':') ||
            !std::getline(token, response_part)) {
          reader.Fail("history token '" + tokens[i] +
                      "' is not system:query:response");
        }
        const int sys = reader.ParseInt(sys_part) - 1;
        if (sys < 0 || sys >= arity) reader.Fail("system index out of range");
        const int x = systems[sys].query_space().IndexOf(query_part);
        const int y = systems[sys].response_space().IndexOf(response_part);
        if (x < 0 || y < 0) {
          reader.Fail("history token '" + tokens[i] + "' uses unknown labels");
        }
        history.push_back({sys, x, y});
      }
      const int choice_sys = reader.ParseInt(tokens[bar + 2]) - 1;
      if (choice_sys < 0 || choice_sys >= arity) {
        reader.Fail("system index out of range");
      }
      const int query =
          systems[choice_sys].query_space().IndexOf(tokens[bar + 3]);
      if (query < 0) reader.Fail("unknown query label");
      strategy.emplace(std::move(history), QueryChoice{choice_sys, query});
      continue;
    }
    reader.Fail("unknown directive '" + tokens[0] + "'");
  }
  if (strategy.empty()) reader.Fail("adversary has no moves");
  try {
    return Adversary(arity, horizon, std::move(strategy));
  } catch (const SystemError& e) {
    throw ParseError(context + ": " + e.what());
  }
}

DecompositionDocument ReadDecomposition(std::istream& in,
                                        const std::string& context) {
  LineReader reader(in, context);
  ExpectHeader(reader, "decomposition");
  std::vector<std::string> tokens;
  if (!reader.NextTokens(tokens) || tokens[0] != "epsilon" ||
      tokens.size() != 2) {
    reader.Fail("expected 'epsilon <value>'");
  }
  const double epsilon = reader.ParseDouble(tokens[1]);
  if (!reader.NextTokens(tokens) || tokens[0] != "delta" ||
      tokens.size() != 2) {
    reader.Fail("expected 'delta <value>'");
  }
  const double delta = reader.ParseDouble(tokens[1]);

  InteractiveSystem m0 = ReadSystemBody(reader, "m0");
  InteractiveSystem m1 = ReadSystemBody(reader, "m1");
  Decomposition decomposition;
  decomposition.e0 = ReadSystemBody(reader, "e0");
  decomposition.e1 = ReadSystemBody(reader, "e1");
  decomposition.n0 = ReadSystemBody(reader, "n0");
  decomposition.n1 = ReadSystemBody(reader, "n1");
  decomposition.epsilon = epsilon;
  decomposition.delta = delta;
  try {
    return DecompositionDocument{SystemPair(std::move(m0), std::move(m1)),
                                 std::move(decomposition)};
  } catch (const SystemError& e) {
    throw ParseError(context + ": " + e.what());
  }
}

namespace {

std::ifstream OpenForRead(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  return in;
}

std::ofstream OpenForWrite(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(path + ": cannot write");
  return out;
}

}  // namespace

SystemPair LoadPair(const std::string& path) {
  std::ifstream in = OpenForRead(path);
  return ReadPair(in, path);
}

void SavePair(const std::string& path, const SystemPair& pair) {
  std::ofstream out = OpenForWrite(path);
  WritePair(out, pair);
}

Adversary LoadAdversary(const std::string& path,
                        const std::vector<InteractiveSystem>& systems) {
  std::ifstream in = OpenForRead(path);
  return ReadAdversary(in, path, systems);
}

void SaveAdversary(const std::string& path, const Adversary& adversary,
                   const std::vector<InteractiveSystem>& systems) {
  std::ofstream out = OpenForWrite(path);
  WriteAdversary(out, adversary, systems);
}

DecompositionDocument LoadDecomposition(const std::string& path) {
  std::ifstream in = OpenForRead(path);
  return ReadDecomposition(in, path);
}

void SaveDecomposition(const std::string& path, const SystemPair& pair,
                       const Decomposition& decomposition) {
  std::ofstream out = OpenForWrite(path);
  WriteDecomposition(out, pair, decomposition);
}

}  // namespace dpcomp
