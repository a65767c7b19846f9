#pragma once

#include <string>

#include "odlin/datavec.hpp"
#include "odlin/histogram.hpp"
#include "odlin/linpn.hpp"
#include "odlin/semieq.hpp"
#include "odlin/solvers.hpp"

// All formats carry "format": "odlin/1". Rationals travel as strings in
// lowest terms ("p" or "p/q"); loading validates every structural invariant
// and throws input_error with a position-bearing message on malformed input.
// Serialization is byte-deterministic: keys sorted, two-space indent, one
// trailing newline.

namespace odlin {

Instance parse_instance(const std::string& text);
std::string dump_instance(const Instance& inst);

Vas parse_vas(const std::string& text);
std::string dump_vas(const Vas& vas);

RatMat parse_matrix_file(const std::string& text);
std::string dump_matrix_file(const RatMat& m);

Multihistogram parse_multihistogram(const std::string& text);
std::string dump_multihistogram(const Multihistogram& fam);

SemiEq parse_semieq(const std::string& text);
std::string dump_semieq(const SemiEq& se);

Witness parse_witness(const std::string& text);
std::string dump_witness(const Witness& w);

std::string dump_verdict(const Verdict& v);

// CLI result payloads.
std::string dump_hist_check(const HistogramCheck& chk);
std::string dump_decomposition(const std::vector<SimpleHistogram>& simples);
std::string dump_validity(bool valid, const std::string& reason);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace odlin
