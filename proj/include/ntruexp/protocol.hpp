// Copyright 2026 The ntruexp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Executable actor model of the two issuance flows: the two-party
// end-entity <-> certificate-authority direct expansion (messages
// c_a/c_b) and the three-party EE -> RA -> CA butterfly issuance
// (messages c_1/c_2/c_3), over an in-process synchronous transport.

#ifndef NTRUEXP_PROTOCOL_HPP
#define NTRUEXP_PROTOCOL_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ntruexp/certificate.hpp"
#include "ntruexp/expansion.hpp"
#include "ntruexp/ntru.hpp"
#include "ntruexp/params.hpp"
#include "ntruexp/rng.hpp"

namespace ntruexp {

enum class Role { kEndEntity, kRegistrationAuthority, kCertificateAuthority };
enum class FlowKind { kDirect, kButterfly };
enum class MsgKind { kC1, kC2, kC3, kCaReq, kCaResp };

using RequestId = std::array<uint8_t, 16>;

struct ProtocolMessage {
  MsgKind kind;
  RequestId request_id{};
  std::vector<CiphertextBlock> payload;
};

// An actor never stores another actor's private material; the RA never
// observes the CA's expander, the CA never observes the caterpillar key
// in the butterfly flow. observed_plaintext records every ring element
// the actor saw in the clear, for structural view-separation checks.
struct Actor {
  Role role;
  PrivateKey sk;  // EE: caterpillar private key; RA/CA: receive keypair
  PublicKey pk;
  std::map<RequestId, ExpanderSecret> expanders;
  std::map<RequestId, PseudonymCertificate> issued;  // CA only
  std::set<RequestId> seen_requests;
  std::vector<RingElement> observed_plaintext;
};

class ProtocolError : public std::runtime_error {
 public:
  ProtocolError(std::string step, const std::string& what)
      : std::runtime_error(step + ": " + what), step_(std::move(step)) {}
  const std::string& step() const { return step_; }

 private:
  std::string step_;
};

Actor make_actor(Role role, const NtruParams& params, Rng& rng);

// EE encrypts (caterpillar public key, permissions) to the recipient.
// kind is kC1 for the butterfly flow, kCaReq for the direct flow.
ProtocolMessage ee_create_request(Actor& ee, const PublicKey& recipient,
                                  std::span<const uint8_t> permissions,
                                  MsgKind kind, Rng& rng);

// RA: decrypt c_1, sample the cocoon expander d, compute u = h*d, store d
// under the request id, re-encrypt (u, permissions) to the CA as c_2.
// Duplicate request ids are rejected.
ProtocolMessage ra_process(Actor& ra, const ProtocolMessage& msg,
                           const PublicKey& ca_pk, Rng& rng);

// CA: decrypt c_2 (or c_a), sample its expander, expand once more, issue
// the pseudonym certificate under the resulting key and encrypt it with
// that same key.
ProtocolMessage ca_process(Actor& ca, const ProtocolMessage& msg, Rng& rng);

// EE decrypts c_3 / c_b with the caterpillar private key it generated
// before the flow began. nullopt signals an integrity failure (possible
// genuine NTRU decryption failure); the caller may retry the flow once.
std::optional<PseudonymCertificate> ee_receive(Actor& ee,
                                               const ProtocolMessage& msg,
                                               const NtruParams& params);

struct FlowResult {
  FlowKind kind;
  bool success = false;
  int retries = 0;
  std::vector<ProtocolMessage> messages;
  std::optional<PseudonymCertificate> certificate;
  Actor ee, ra, ca;  // final actor states, for full-knowledge assertions
  std::vector<std::string> log;

  // Line-delimited structured text transcript consumed by the CLI demo.
  std::string serialize_transcript() const;
};

FlowResult run_flow(FlowKind kind, const NtruParams& params, Rng& rng,
                    std::span<const uint8_t> permissions = {});

// Structural view separation: the RA never saw the CA's expander or the
// butterfly key; the CA never saw the caterpillar key (butterfly flow).
bool check_view_separation(const FlowResult& result);

}  // namespace ntruexp

#endif  // NTRUEXP_PROTOCOL_HPP
