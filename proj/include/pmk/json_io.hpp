// json_io.hpp — the proof, SK-proof and countermodel file formats.
// Graphs and formulas embed as canonical strings; round trips are
// bit-exact.

#pragma once

#include "pmk/oracle.hpp"
#include "pmk/proof.hpp"
#include "pmk/sk.hpp"

#include <string>

namespace pmk {

std::string proof_to_json(const Proof& p);
Proof proof_from_json(const std::string& text);

std::string sk_to_json(const SKProof& p);
SKProof sk_from_json(const std::string& text);

std::string countermodel_to_json(const Countermodel& c);

} // namespace pmk
