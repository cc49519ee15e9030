/* The public header must compile as C. */
#include <rejscore/rejscore.h>

int rejscore_c_smoke(void) {
  rejscore_params p;
  uint32_t tau_addrs = 0, out_addrs = 0;
  if (rejscore_builtin_params(1, &p) != REJSCORE_OK) return 1;
  if (rejscore_address_counts(&p, &tau_addrs, &out_addrs) != REJSCORE_OK) return 2;
  return tau_addrs == 365 && out_addrs == 351 ? 0 : 3;
}
