#pragma once

#include <optional>
#include <vector>

#include "recon/balls.hpp"
#include "recon/sequence.hpp"

namespace recon {

/// Generic intersection decoder: the candidates are the codewords whose
/// radius-t ball contains every read.
struct DecodeResult {
  std::optional<Sequence> unique;
  std::vector<Sequence> candidates;
};

/// Throws when no codeword is consistent with the reads ("reads inconsistent
/// with code") or when read lengths do not match the channel.
DecodeResult reconstruct(const std::vector<Sequence>& reads, const SequenceSet& code, int t,
                         BallKind kind);

}  // namespace recon
