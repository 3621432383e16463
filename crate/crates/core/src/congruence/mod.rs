//! Number-theoretic consequences of the product expansion: Fermat
//! quotients, Fermat's little theorem, Wieferich primes and partitions.

pub mod fermat;
pub mod partition;
pub mod primes;
pub mod wieferich;

pub use fermat::{
    fermat_check, fermat_check_upto, fermat_numerator, fermat_quotient_via_product, fermat_witness,
    fermat_witness_for_series, rational_family_series, FermatWitness, RationalFamily,
};
pub use partition::{partition_numbers, partitions_via_product, plus_product, PartitionTable};
pub use primes::{is_prime, primes_in_range};
pub use wieferich::{
    is_wieferich, wieferich_scan, wieferich_scan_with_threads, WieferichScanReport,
};
