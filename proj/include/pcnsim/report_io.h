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

// Report files written by Emit. Amounts are fixed four-decimal strings in
// CSV and plain numbers (units) in JSON.
//
// transactions.csv      id,sender,receiver,amount,outcome,hops,total_fee
// amount_histogram.csv  bin_lower,bin_upper,<one count column per outcome>
//                       (bin_upper is "inf" for the last bin)
// pathlen_histogram.csv hops,<one count column per outcome>
// node_stats.csv        node,degree,earned_fees,balance,wealth
// summary.json          {"config": {...}, "totals": {...}}
//
// Outcome columns, in order: routed_offchain, onchain_too_expensive,
// onchain_no_route, failed_insufficient_funds.

#ifndef PCNSIM_REPORT_IO_H_
#define PCNSIM_REPORT_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "pcnsim/simulation.h"

namespace pcnsim {

void WriteTransactionsCsv(const SimReport& report, std::ostream& os);
void WriteAmountHistogramCsv(const SimReport& report, std::ostream& os);
void WritePathLengthHistogramCsv(const SimReport& report, std::ostream& os);
void WriteNodeStatsCsv(const SimReport& report, std::ostream& os);
std::string SummaryJson(const SimReport& report);

// Writes all five files into out_dir, creating it if needed. I/O failures
// throw Error(kIo) naming the offending path.
void Emit(const SimReport& report, const std::filesystem::path& out_dir);

}  // namespace pcnsim

#endif  // PCNSIM_REPORT_IO_H_
