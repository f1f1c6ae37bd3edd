//! Command-line front end for the soft int-group calculus.

mod commands;

use std::process::ExitCode;

const USAGE: &str = "\
softint — soft int-groups over finite groups

usage: softint <verb> [flags]

verbs:
  validate    --group SPEC --soft PATH
              int-group verdict, normality, first witness on failure
  normal      --group SPEC --soft PATH
              all six normality criteria and the agreement flag
  levels      --group SPEC --soft PATH
              image class, level subgroups, chain and poset verdicts
  normalizer  --group SPEC --soft PATH
              N(f) and its index
  conjugates  --group SPEC --soft PATH
              the distinct conjugates and the normalizer index check
  product     --group SPEC --soft PATH --soft2 PATH
              soft product, emitted in the soft-set file format
  quotient    --group SPEC --soft PATH
              coset table of G/f and the bijection onto G/e_f
  image       --group SPEC --soft PATH --hom SPEC
              soft image along a homomorphism (soft set over its domain)
  preimage    --group SPEC --soft PATH --hom SPEC
              soft preimage (soft set over its codomain)
  enumerate   --group SPEC --universe M [--list]
              counts of soft sets, int-groups, and normal int-groups
  theorems    [--preset desk | --groups CSV --universes CSV]
              [--mode exhaustive|random:N:SEED] [--format text|structured]
              run the theorem suite

group specs:  cyclic:n  dihedral:n  klein  quaternion  symmetric:n  table:PATH
hom specs:    mod:n:k  sign:n  quot:i,j,...  incl:i,j,...  identity
              (quot/incl members are element indices of --group)

exit codes:   0 ok, 1 violated verdicts, 2 parse or usage errors
";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        eprint!("{USAGE}");
        return ExitCode::from(2);
    }
    if args[0] == "--help" || args[0] == "help" {
        print!("{USAGE}");
        return ExitCode::SUCCESS;
    }
    match commands::dispatch(&args) {
        Ok(code) => ExitCode::from(code),
        Err(commands::CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `softint --help` for usage");
            ExitCode::from(2)
        }
        Err(commands::CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(commands::CliError::Op(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
