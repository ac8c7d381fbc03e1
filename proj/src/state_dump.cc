// Copyright 2026 The pcnsim Authors
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

#include "pcnsim/state_dump.h"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "pcnsim/error.h"

namespace pcnsim {
namespace {

constexpr std::string_view kMagic = "pcnsim-state";
constexpr int kVersion = 1;

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

[[noreturn]] void Fail(size_t line_no, const std::string& why) {
  throw Error(ErrorCode::kParse,
              "state dump line " + std::to_string(line_no) + ": " + why);
}

int64_t ParseInt(std::string_view field, size_t line_no) {
  int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    Fail(line_no, "bad integer '" + std::string(field) + "'");
  }
  return value;
}

struct Parsed {
  std::vector<NodeAccount> accounts;
  std::vector<bool> seen;
  std::vector<Channel> channels;
  Amount chain_fee;
  Amount burned;
  Amount supply;
  std::optional<Transaction> tx;
};

Parsed ParseLines(std::string_view text, bool allow_tx) {
  Parsed out;
  bool have_header = false;
  bool have_nodes = false;
  size_t line_no = 0;
  while (!text.empty()) {
    const size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view() : text.substr(end + 1);
    ++line_no;
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto f = SplitFields(line);
    if (f.empty()) continue;

    if (!have_header) {
      if (f.size() != 2 || f[0] != kMagic || ParseInt(f[1], line_no) != kVersion) {
        Fail(line_no, "expected header 'pcnsim-state 1'");
      }
      have_header = true;
      continue;
    }
    const std::string_view key = f[0];
    if (key == "nodes" && f.size() == 2) {
      const int64_t n = ParseInt(f[1], line_no);
      if (n < 0) Fail(line_no, "negative node count");
      out.accounts.assign(static_cast<size_t>(n), NodeAccount{});
      out.seen.assign(static_cast<size_t>(n), false);
      have_nodes = true;
    } else if (key == "chain_fee" && f.size() == 2) {
      out.chain_fee = Amount::Parse(f[1]);
    } else if (key == "burned" && f.size() == 2) {
      out.burned = Amount::Parse(f[1]);
    } else if (key == "supply" && f.size() == 2) {
      out.supply = Amount::Parse(f[1]);
    } else if (key == "node" && f.size() == 4) {
      if (!have_nodes) Fail(line_no, "'node' before 'nodes'");
      const int64_t id = ParseInt(f[1], line_no);
      if (id < 0 || static_cast<size_t>(id) >= out.accounts.size()) {
        Fail(line_no, "node id out of range");
      }
      if (out.seen[static_cast<size_t>(id)]) Fail(line_no, "duplicate node");
      out.seen[static_cast<size_t>(id)] = true;
      out.accounts[static_cast<size_t>(id)] = {Amount::Parse(f[2]),
                                               Amount::Parse(f[3])};
    } else if (key == "channel" && f.size() == 5) {
      Channel ch;
      ch.a = static_cast<NodeId>(ParseInt(f[1], line_no));
      ch.b = static_cast<NodeId>(ParseInt(f[2], line_no));
      ch.cap_ab = Amount::Parse(f[3]);
      ch.cap_ba = Amount::Parse(f[4]);
      ch.total = ch.cap_ab + ch.cap_ba;
      out.channels.push_back(ch);
    } else if (allow_tx && key == "tx" && f.size() == 4) {
      if (out.tx) Fail(line_no, "more than one tx line");
      out.tx = Transaction{static_cast<NodeId>(ParseInt(f[1], line_no)),
                           static_cast<NodeId>(ParseInt(f[2], line_no)),
                           Amount::Parse(f[3])};
    } else {
      Fail(line_no, "unrecognized record '" + std::string(key) + "'");
    }
  }
  if (!have_header) Fail(line_no, "empty input");
  if (!have_nodes) Fail(line_no, "missing 'nodes' record");
  return out;
}

NetworkState Build(Parsed& parsed) {
  return NetworkState::Restore(std::move(parsed.accounts), parsed.channels,
                               parsed.burned, parsed.chain_fee, parsed.supply);
}

}  // namespace

std::string DumpState(const NetworkState& state) {
  std::ostringstream os;
  os << kMagic << ' ' << kVersion << '\n'
     << "nodes " << state.node_count() << '\n'
     << "chain_fee " << state.chain_fee() << '\n'
     << "burned " << state.burned() << '\n'
     << "supply " << state.initial_supply() << '\n';
  for (size_t i = 0; i < state.node_count(); ++i) {
    const NodeAccount& acct = state.account(static_cast<NodeId>(i));
    os << "node " << i << ' ' << acct.balance << ' ' << acct.earned_fees
       << '\n';
  }
  for (ChannelId id : state.OpenChannelIds()) {
    const Channel& ch = state.channel(id);
    os << "channel " << ch.a << ' ' << ch.b << ' ' << ch.cap_ab << ' '
       << ch.cap_ba << '\n';
  }
  return os.str();
}

NetworkState ParseStateDump(std::string_view text) {
  Parsed parsed = ParseLines(text, /*allow_tx=*/false);
  return Build(parsed);
}

std::string DumpInstance(const NetworkState& state, const Transaction& tx) {
  return DumpState(state) + "tx " + std::to_string(tx.sender) + ' ' +
         std::to_string(tx.receiver) + ' ' + tx.amount.ToString() + '\n';
}

RoutingInstance ParseInstance(std::string_view text) {
  Parsed parsed = ParseLines(text, /*allow_tx=*/true);
  if (!parsed.tx) {
    throw Error(ErrorCode::kParse, "routing instance has no 'tx' record");
  }
  const Transaction tx = *parsed.tx;
  return {Build(parsed), tx};
}

}  // namespace pcnsim
