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

#include "ntruexp/protocol.hpp"

#include <algorithm>
#include <sstream>

#include "ntruexp/encoding.hpp"

namespace ntruexp {
namespace {

// Demo certificates carry a fixed validity window; wall-clock reads would
// break the byte-identical-transcript determinism guarantee.
constexpr uint64_t kValidityStart = 1700000000;
constexpr uint64_t kValiditySeconds = 7 * 24 * 3600;

std::string hex(std::span<const uint8_t> bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

// Key-request payload: n x u16 residues mod q for the ring element,
// followed by the raw permissions bytes (length implied by the frame).
std::vector<uint8_t> serialize_key_request(
    const RingElement& key, std::span<const uint8_t> permissions,
    const NtruParams& params) {
  std::vector<uint8_t> out;
  append_ring_u16(out, key, params.q);
  out.insert(out.end(), permissions.begin(), permissions.end());
  return out;
}

std::optional<std::pair<RingElement, std::vector<uint8_t>>> parse_key_request(
    std::span<const uint8_t> bytes, const NtruParams& params) {
  const size_t n = static_cast<size_t>(params.n);
  if (bytes.size() < 2 * n) return std::nullopt;
  auto key = read_ring_u16(bytes, n, params.q);
  if (!key) return std::nullopt;
  std::vector<uint8_t> perms(bytes.begin() + 2 * n, bytes.end());
  return std::make_pair(std::move(*key), std::move(perms));
}

std::vector<CiphertextBlock> encrypt_payload(std::span<const uint8_t> bytes,
                                             const RingElement& key,
                                             const NtruParams& params,
                                             Rng& rng) {
  const EncodedMessage enc = encode_bytes(bytes, params);
  std::vector<CiphertextBlock> out;
  out.reserve(enc.blocks.size());
  for (const auto& block : enc.blocks) {
    out.push_back(encrypt(key, block, params, rng));
  }
  return out;
}

std::optional<std::vector<uint8_t>> decrypt_payload(
    std::span<const CiphertextBlock> blocks, const PrivateKey& sk,
    const NtruParams& params) {
  EncodedMessage enc;
  enc.blocks.reserve(blocks.size());
  for (const auto& ct : blocks) {
    enc.blocks.push_back(decrypt(sk, ct, params));
  }
  return decode_bytes(enc, params);
}

bool view_contains(const std::vector<RingElement>& view,
                   const RingElement& x) {
  return std::any_of(view.begin(), view.end(), [&](const RingElement& v) {
    return v.coeffs == x.coeffs;
  });
}

}  // namespace

Actor make_actor(Role role, const NtruParams& params, Rng& rng) {
  auto [sk, pk] = keygen(params, rng);
  return Actor{role, std::move(sk), std::move(pk), {}, {}, {}, {}};
}

ProtocolMessage ee_create_request(Actor& ee, const PublicKey& recipient,
                                  std::span<const uint8_t> permissions,
                                  MsgKind kind, Rng& rng) {
  if (kind != MsgKind::kC1 && kind != MsgKind::kCaReq) {
    throw ProtocolError("ee_create_request", "kind must be c1 or c_a");
  }
  const NtruParams& params = ee.pk.params;
  ProtocolMessage msg;
  msg.kind = kind;
  rng.fill_bytes(msg.request_id);
  const auto payload = serialize_key_request(ee.pk.h, permissions, params);
  msg.payload = encrypt_payload(payload, recipient.h, params, rng);
  return msg;
}

ProtocolMessage ra_process(Actor& ra, const ProtocolMessage& msg,
                           const PublicKey& ca_pk, Rng& rng) {
  if (msg.kind != MsgKind::kC1) {
    throw ProtocolError("ra_process", "expected c1");
  }
  if (!ra.seen_requests.insert(msg.request_id).second) {
    throw ProtocolError("ra_process", "duplicate request id");
  }
  const NtruParams& params = ra.pk.params;
  const auto payload = decrypt_payload(msg.payload, ra.sk, params);
  if (!payload) throw ProtocolError("ra_process", "integrity failure on c1");
  auto request = parse_key_request(*payload, params);
  if (!request) throw ProtocolError("ra_process", "malformed c1 payload");
  auto& [caterpillar, permissions] = *request;
  ra.observed_plaintext.push_back(caterpillar);

  ExpanderSecret d = sample_expander(params, ExpanderRole::kRaCocoon, rng);
  const ExpandedPublicKey cocoon =
      expand_key(ExpandedPublicKey{caterpillar, 0}, d, params);
  ra.observed_plaintext.push_back(cocoon.key);
  ra.expanders.emplace(msg.request_id, std::move(d));

  ProtocolMessage out;
  out.kind = MsgKind::kC2;
  out.request_id = msg.request_id;
  out.payload = encrypt_payload(
      serialize_key_request(cocoon.key, permissions, params), ca_pk.h, params,
      rng);
  return out;
}

ProtocolMessage ca_process(Actor& ca, const ProtocolMessage& msg, Rng& rng) {
  const bool direct = msg.kind == MsgKind::kCaReq;
  if (!direct && msg.kind != MsgKind::kC2) {
    throw ProtocolError("ca_process", "expected c2 or c_a");
  }
  if (!ca.seen_requests.insert(msg.request_id).second) {
    throw ProtocolError("ca_process", "duplicate request id");
  }
  const NtruParams& params = ca.pk.params;
  const auto payload = decrypt_payload(msg.payload, ca.sk, params);
  if (!payload) throw ProtocolError("ca_process", "integrity failure");
  auto request = parse_key_request(*payload, params);
  if (!request) throw ProtocolError("ca_process", "malformed payload");
  auto& [incoming_key, permissions] = *request;
  ca.observed_plaintext.push_back(incoming_key);

  // c_a carries the original public key (depth 0), c_2 the cocoon key.
  const int incoming_depth = direct ? 0 : 1;
  ExpanderSecret r = sample_expander(
      params, direct ? ExpanderRole::kDirect : ExpanderRole::kCaButterfly,
      rng);
  const ExpandedPublicKey target =
      expand_key(ExpandedPublicKey{incoming_key, incoming_depth}, r, params);
  ca.observed_plaintext.push_back(target.key);

  PseudonymCertificate cert;
  rng.fill_bytes(cert.pseudonym_id);
  cert.public_key = target;
  cert.permissions = std::move(permissions);
  cert.validity_start = kValidityStart;
  cert.validity_end = kValidityStart + kValiditySeconds;
  cert.params_id = params.params_id;

  ProtocolMessage out;
  out.kind = direct ? MsgKind::kCaResp : MsgKind::kC3;
  out.request_id = msg.request_id;
  out.payload = encrypt_certificate(cert, target, params, rng);
  ca.expanders.emplace(msg.request_id, std::move(r));
  ca.issued.emplace(msg.request_id, std::move(cert));
  return out;
}

std::optional<PseudonymCertificate> ee_receive(Actor& ee,
                                               const ProtocolMessage& msg,
                                               const NtruParams& params) {
  if (msg.kind != MsgKind::kC3 && msg.kind != MsgKind::kCaResp) {
    throw ProtocolError("ee_receive", "expected c3 or c_b");
  }
  return decrypt_certificate(msg.payload, ee.sk, params);
}

std::string FlowResult::serialize_transcript() const {
  std::ostringstream out;
  for (const auto& line : log) out << line << '\n';
  return out.str();
}

FlowResult run_flow(FlowKind kind, const NtruParams& params, Rng& rng,
                    std::span<const uint8_t> permissions) {
  static const uint8_t kDefaultPermissions[] = {'d', 'e', 'm', 'o'};
  if (permissions.empty()) permissions = kDefaultPermissions;

  FlowResult result;
  result.kind = kind;
  result.log.push_back(std::string("flow ") +
                       (kind == FlowKind::kButterfly ? "butterfly" : "direct") +
                       " preset " + params.name);

  result.ee = make_actor(Role::kEndEntity, params, rng);
  result.ca = make_actor(Role::kCertificateAuthority, params, rng);
  if (kind == FlowKind::kButterfly) {
    result.ra = make_actor(Role::kRegistrationAuthority, params, rng);
  }
  result.log.push_back("actors ready");

  for (int attempt = 0; attempt <= 1; ++attempt) {
    result.messages.clear();
    if (kind == FlowKind::kButterfly) {
      ProtocolMessage c1 = ee_create_request(result.ee, result.ra.pk,
                                             permissions, MsgKind::kC1, rng);
      result.log.push_back("msg c1 request=" + hex(c1.request_id) +
                           " blocks=" + std::to_string(c1.payload.size()));
      ProtocolMessage c2 = ra_process(result.ra, c1, result.ca.pk, rng);
      result.log.push_back("msg c2 request=" + hex(c2.request_id) +
                           " blocks=" + std::to_string(c2.payload.size()));
      ProtocolMessage c3 = ca_process(result.ca, c2, rng);
      // the RA forwards c3 to the EE untouched
      result.log.push_back("msg c3 request=" + hex(c3.request_id) +
                           " blocks=" + std::to_string(c3.payload.size()));
      result.messages = {std::move(c1), std::move(c2), std::move(c3)};
    } else {
      ProtocolMessage ca_req = ee_create_request(
          result.ee, result.ca.pk, permissions, MsgKind::kCaReq, rng);
      result.log.push_back("msg c_a request=" + hex(ca_req.request_id) +
                           " blocks=" + std::to_string(ca_req.payload.size()));
      ProtocolMessage ca_resp = ca_process(result.ca, ca_req, rng);
      result.log.push_back("msg c_b request=" + hex(ca_resp.request_id) +
                           " blocks=" +
                           std::to_string(ca_resp.payload.size()));
      result.messages = {std::move(ca_req), std::move(ca_resp)};
    }

    result.certificate =
        ee_receive(result.ee, result.messages.back(), params);
    if (result.certificate) {
      result.log.push_back(
          "cert recovered pseudonym=" + hex(result.certificate->pseudonym_id) +
          " depth=" + std::to_string(result.certificate->public_key.depth));
      result.success = true;
      break;
    }
    result.log.push_back("integrity failure at ee_receive, retrying");
    result.retries = attempt + 1;
    if (attempt == 1) {
      result.log.push_back("flow failed after retry");
      return result;
    }
  }

  result.log.push_back(check_view_separation(result)
                           ? "view-separation ok"
                           : "view-separation VIOLATED");
  return result;
}

bool check_view_separation(const FlowResult& result) {
  // CA must never have seen the caterpillar public key (butterfly flow),
  // and its stored state must not include it either.
  if (result.kind == FlowKind::kButterfly) {
    if (view_contains(result.ca.observed_plaintext, result.ee.pk.h)) {
      return false;
    }
    // RA must never have seen the CA's expander or the butterfly key.
    for (const auto& [id, r] : result.ca.expanders) {
      if (view_contains(result.ra.observed_plaintext, r.e)) return false;
    }
    for (const auto& [id, cert] : result.ca.issued) {
      if (view_contains(result.ra.observed_plaintext, cert.public_key.key)) {
        return false;
      }
    }
    // actors never store foreign private material
    for (const auto& [id, d] : result.ra.expanders) {
      if (d.e.coeffs == result.ee.sk.f.coeffs) return false;
    }
  }
  return !view_contains(result.ca.observed_plaintext, result.ee.sk.f);
}

}  // namespace ntruexp
