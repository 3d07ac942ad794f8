#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swapqkd/bell.hpp"

namespace swapqkd {

/// Everything the public classical channel ever carries. By construction
/// a message holds at most a two-bit state code and a boolean; a local
/// operation is never transmitted.
enum class MessageType {
  MeasurementDone,  // sender announces a Bell measurement happened (no result)
  ResultRequest,    // receiver asks for the corresponding outcome
  ResultAnnounce,   // sender reveals the outcome's two-bit code
  CheckReveal,      // receiver publishes one measured code for verification
  CheckVerdict,     // sender replies whether it matches the expectation
  Abort,            // terminal: the key is abandoned
};

struct ClassicalMessage {
  MessageType type = MessageType::MeasurementDone;
  int seq = 0;     // position in the transcript
  int round = -1;  // -1 when the message is not tied to a round
  std::optional<BitCode> code;
  std::optional<bool> match;
  std::string reason;

  static ClassicalMessage measurement_done(int seq, int round);
  static ClassicalMessage result_request(int seq, int round);
  static ClassicalMessage result_announce(int seq, int round, BellLabel label);
  static ClassicalMessage check_reveal(int seq, int round, BellLabel label);
  static ClassicalMessage check_verdict(int seq, int round, bool match);
  static ClassicalMessage abort(int seq, std::string reason);
};

std::string_view message_type_name(MessageType type);

/// One transcript record as a single JSON line (see README for the schema).
std::string to_json_line(const ClassicalMessage& message);

using Transcript = std::vector<ClassicalMessage>;

}  // namespace swapqkd
