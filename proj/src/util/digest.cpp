#include "folio/util/digest.hpp"

#include <openssl/evp.h>

#include "folio/util/errors.hpp"

namespace folio::util {

std::string checksum_name(ChecksumType t) {
  return t == ChecksumType::MD5 ? "MD5" : "SHA256";
}

ChecksumType checksum_from_name(std::string_view name) {
  if (name == "MD5" || name == "md5") return ChecksumType::MD5;
  if (name == "SHA256" || name == "sha256") return ChecksumType::SHA256;
  throw DataError("unknown checksum type: " + std::string(name));
}

std::string hex_digest(ChecksumType t, std::string_view data) {
  const EVP_MD* md = t == ChecksumType::MD5 ? EVP_md5() : EVP_sha256();
  unsigned char out[EVP_MAX_MD_SIZE];
  unsigned int out_len = 0;
  if (!EVP_Digest(data.data(), data.size(), out, &out_len, md, nullptr))
    throw Error("digest computation failed");
  static const char* hex = "0123456789abcdef";
  std::string s(out_len * 2, '0');
  for (unsigned int i = 0; i < out_len; ++i) {
    s[2 * i] = hex[out[i] >> 4];
    s[2 * i + 1] = hex[out[i] & 0xf];
  }
  return s;
}

}  // namespace folio::util
