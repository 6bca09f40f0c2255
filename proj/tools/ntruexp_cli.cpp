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
// Batch command-line surface. Exit codes: 0 success, 1 usage, 2 crypto
// failure, 3 integrity failure, 4 I/O failure.

#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ntruexp/bench.hpp"
#include "ntruexp/certificate.hpp"
#include "ntruexp/encoding.hpp"
#include "ntruexp/expansion.hpp"
#include "ntruexp/keyfile.hpp"
#include "ntruexp/ntru.hpp"
#include "ntruexp/params.hpp"
#include "ntruexp/protocol.hpp"
#include "ntruexp/rng.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCrypto = 2;
constexpr int kExitIntegrity = 3;
constexpr int kExitIo = 4;

ntruexp::Rng make_rng(const std::optional<uint64_t>& seed) {
  if (seed) return ntruexp::Rng(*seed);
  std::random_device rd;
  return ntruexp::Rng(static_cast<uint64_t>(rd()) << 32 | rd());
}

int cmd_keygen(const std::string& preset_name, const std::string& out_private,
               const std::string& out_public, std::optional<uint64_t> seed,
               bool self_test) {
  const auto params = ntruexp::preset_by_name(preset_name);
  if (!params) {
    std::fprintf(stderr, "unknown preset: %s\n", preset_name.c_str());
    return kExitUsage;
  }
  auto rng = make_rng(seed);
  auto [sk, pk] = ntruexp::keygen(*params, rng);

  if (self_test) {
    const auto msg = ntruexp::sample_uniform_ternary(
        static_cast<size_t>(params->n), rng);
    const auto ct = ntruexp::encrypt(pk, msg, rng);
    if (ntruexp::decrypt(sk, ct, *params).coeffs !=
        ntruexp::reduce(msg, params->p).coeffs) {
      std::fprintf(stderr, "keygen self-test roundtrip failed\n");
      return kExitCrypto;
    }
  }

  const auto sk_bytes = ntruexp::serialize_private_key(sk, *params);
  const auto pk_bytes = ntruexp::serialize_public_key(pk);
  ntruexp::write_file(out_private, sk_bytes);
  ntruexp::write_file(out_public, pk_bytes);
  std::printf("public key fingerprint: %08x\n", ntruexp::crc32(pk_bytes));
  return kExitOk;
}

int cmd_expand(const std::string& in_public, const std::string& out_expanded,
               std::optional<uint64_t> seed,
               const std::string& keep_secret_path) {
  const auto key_file = ntruexp::parse_key_file(ntruexp::read_file(in_public));
  if (!key_file) {
    std::fprintf(stderr, "invalid or corrupt key file: %s\n",
                 in_public.c_str());
    return kExitIntegrity;
  }
  ntruexp::ExpandedPublicKey base;
  if (key_file->kind == ntruexp::KeyKind::kPublic) {
    base = ntruexp::as_expanded(*key_file->public_key);
  } else if (key_file->kind == ntruexp::KeyKind::kExpanded) {
    base = *key_file->expanded;
    if (base.depth >= 2) {
      std::fprintf(stderr, "key already at maximum expansion depth\n");
      return kExitUsage;
    }
  } else {
    std::fprintf(stderr, "expand requires a public or expanded key\n");
    return kExitUsage;
  }

  const auto& params = key_file->params;
  auto rng = make_rng(seed);
  const auto secret =
      ntruexp::sample_expander(params, ntruexp::ExpanderRole::kDirect, rng);
  const auto expanded = ntruexp::expand_key(base, secret, params);

  ntruexp::write_file(out_expanded,
                      ntruexp::serialize_expanded_key(expanded, params));
  const auto secret_bytes = ntruexp::serialize_expander_secret(secret, params);
  if (!keep_secret_path.empty()) {
    ntruexp::write_file(keep_secret_path, secret_bytes);
  }
  std::printf("expander fingerprint: %08x\n", ntruexp::crc32(secret_bytes));
  return kExitOk;
}

int cmd_encrypt(const std::string& key_path, const std::string& in_path,
                const std::string& out_path, std::optional<uint64_t> seed) {
  const auto key_file = ntruexp::parse_key_file(ntruexp::read_file(key_path));
  if (!key_file) {
    std::fprintf(stderr, "invalid or corrupt key file\n");
    return kExitIntegrity;
  }
  ntruexp::RingElement key;
  if (key_file->kind == ntruexp::KeyKind::kPublic) {
    key = key_file->public_key->h;
  } else if (key_file->kind == ntruexp::KeyKind::kExpanded) {
    key = key_file->expanded->key;
  } else {
    std::fprintf(stderr, "encrypt requires a public or expanded key\n");
    return kExitUsage;
  }

  const auto& params = key_file->params;
  const auto data = ntruexp::read_file(in_path);
  auto rng = make_rng(seed);
  const auto enc = ntruexp::encode_bytes(data, params);
  std::vector<ntruexp::CiphertextBlock> blocks;
  blocks.reserve(enc.blocks.size());
  for (const auto& block : enc.blocks) {
    blocks.push_back(ntruexp::encrypt(key, block, params, rng));
  }
  ntruexp::write_file(out_path, ntruexp::serialize_ciphertext(blocks, params));
  return kExitOk;
}

int cmd_decrypt(const std::string& key_path, const std::string& in_path,
                const std::string& out_path) {
  const auto key_file = ntruexp::parse_key_file(ntruexp::read_file(key_path));
  if (!key_file) {
    std::fprintf(stderr, "invalid or corrupt key file\n");
    return kExitIntegrity;
  }
  if (key_file->kind != ntruexp::KeyKind::kPrivate) {
    std::fprintf(stderr, "decrypt requires a private key\n");
    return kExitUsage;
  }
  const auto ct = ntruexp::parse_ciphertext(ntruexp::read_file(in_path));
  if (!ct) {
    std::fprintf(stderr, "invalid or corrupt ciphertext file\n");
    return kExitIntegrity;
  }
  const auto& [params, blocks] = *ct;
  ntruexp::EncodedMessage enc;
  for (const auto& block : blocks) {
    enc.blocks.push_back(
        ntruexp::decrypt(*key_file->private_key, block, params));
  }
  const auto data = ntruexp::decode_bytes(enc, params);
  if (!data) {
    std::fprintf(stderr, "integrity check failed (wrong key or corruption)\n");
    return kExitIntegrity;
  }
  ntruexp::write_file(out_path, *data);
  return kExitOk;
}

int cmd_demo(const std::string& flow_name, const std::string& preset_name,
             std::optional<uint64_t> seed) {
  const auto params = ntruexp::preset_by_name(preset_name);
  if (!params) {
    std::fprintf(stderr, "unknown preset: %s\n", preset_name.c_str());
    return kExitUsage;
  }
  const auto kind = flow_name == "direct" ? ntruexp::FlowKind::kDirect
                                          : ntruexp::FlowKind::kButterfly;
  auto rng = make_rng(seed);
  const auto result = ntruexp::run_flow(kind, *params, rng);
  std::fputs(result.serialize_transcript().c_str(), stdout);
  if (!result.success) return kExitCrypto;
  return ntruexp::check_view_separation(result) ? kExitOk : kExitCrypto;
}

int cmd_bench(const std::vector<std::string>& preset_names, int trials,
              const std::string& format) {
  std::vector<ntruexp::BenchReport> reports;
  bool ratio_ok = true;
  auto rng = make_rng(std::nullopt);
  for (const auto& name : preset_names) {
    const auto params = ntruexp::preset_by_name(name);
    if (!params) {
      std::fprintf(stderr, "unknown preset: %s\n", name.c_str());
      return kExitUsage;
    }
    reports.push_back(ntruexp::bench_preset(*params, trials, rng));
    ratio_ok = ratio_ok && reports.back().speedup_ratio >= 100.0;
  }
  std::fputs(ntruexp::emit_table(reports, format == "csv"
                                              ? ntruexp::TableFormat::kCsv
                                              : ntruexp::TableFormat::kText)
                 .c_str(),
             stdout);
  return ratio_ok ? kExitOk : kExitCrypto;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NTRU key expansion and pseudonym certificate toolkit"};
  app.require_subcommand(1);

  std::optional<uint64_t> seed;
  std::string preset = "ntru509";
  std::string out_private, out_public, in_public, out_expanded;
  std::string key_path, in_path, out_path, keep_secret_path;
  std::string flow = "butterfly", format = "text";
  std::vector<std::string> bench_presets = {"ntru509", "ntru677", "ntru821"};
  int trials = 10;
  bool self_test = false;

  auto* keygen_cmd = app.add_subcommand("keygen", "generate an NTRU key pair");
  keygen_cmd->add_option("--preset", preset);
  keygen_cmd->add_option("--out-private", out_private)->required();
  keygen_cmd->add_option("--out-public", out_public)->required();
  keygen_cmd->add_option("--seed", seed);
  keygen_cmd->add_flag("--self-test", self_test);

  auto* expand_cmd =
      app.add_subcommand("expand", "expand a public key (one level)");
  expand_cmd->add_option("--in-public", in_public)->required();
  expand_cmd->add_option("--out-expanded", out_expanded)->required();
  expand_cmd->add_option("--seed", seed);
  expand_cmd->add_option("--keep-secret", keep_secret_path);

  auto* encrypt_cmd = app.add_subcommand("encrypt", "encrypt a file");
  encrypt_cmd->add_option("--key", key_path)->required();
  encrypt_cmd->add_option("--in", in_path)->required();
  encrypt_cmd->add_option("--out", out_path)->required();
  encrypt_cmd->add_option("--seed", seed);

  auto* decrypt_cmd = app.add_subcommand("decrypt", "decrypt a file");
  decrypt_cmd->add_option("--key", key_path)->required();
  decrypt_cmd->add_option("--in", in_path)->required();
  decrypt_cmd->add_option("--out", out_path)->required();

  auto* demo_cmd =
      app.add_subcommand("demo", "run an issuance flow and print the transcript");
  demo_cmd->add_option("--flow", flow)
      ->check(CLI::IsMember({"direct", "butterfly"}));
  demo_cmd->add_option("--preset", preset);
  demo_cmd->add_option("--seed", seed);

  auto* bench_cmd =
      app.add_subcommand("bench", "time keygen vs public-key expansion");
  bench_cmd->add_option("--presets", bench_presets)->delimiter(',');
  bench_cmd->add_option("--trials", trials)->check(CLI::Range(10, 1000000));
  bench_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"csv", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (keygen_cmd->parsed()) {
      return cmd_keygen(preset, out_private, out_public, seed, self_test);
    }
    if (expand_cmd->parsed()) {
      return cmd_expand(in_public, out_expanded, seed, keep_secret_path);
    }
    if (encrypt_cmd->parsed()) {
      return cmd_encrypt(key_path, in_path, out_path, seed);
    }
    if (decrypt_cmd->parsed()) {
      return cmd_decrypt(key_path, in_path, out_path);
    }
    if (demo_cmd->parsed()) {
      return cmd_demo(flow, preset, seed);
    }
    if (bench_cmd->parsed()) {
      return cmd_bench(bench_presets, trials, format);
    }
  } catch (const ntruexp::ResampleExhausted& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitCrypto;
  } catch (const ntruexp::ProtocolError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitCrypto;
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitCrypto;
  }
  return kExitUsage;
}
