from django.core.management.base import CommandError

from cli.services.base import VERIFICATION_FAILED, PresentationCommand
from hopf.services.axioms import verify_axioms
from hopf.services.properties import run_structure_properties
from modact.services.properties import run_module_properties


class Command(PresentationCommand):
    help = 'Verify the Hopf and duality axioms of a presentation; --seed adds the randomized property suites'
    uses_seed = True

    def add_command_arguments(self, parser):
        parser.add_argument('--cases', type=int, help='Cases per property suite (default HOPFKIT_PROPERTY_CASES)')

    def run(self, triplet, config, **options):
        report = verify_axioms(triplet)
        if config.seed is not None:
            report.extend(run_structure_properties(triplet, config.seed, options.get('cases')))
            report.extend(run_module_properties(triplet, config.seed, options.get('cases')))

        if config.is_json:
            self.stdout.write(report.to_json())
        else:
            for entry in report.sorted():
                line = f'{entry.status:4} {entry.axiom} (D={entry.degree})'
                if entry.counterexample:
                    line += f': {entry.counterexample}'
                self.stdout.write(line)
            self.stdout.write(report.summary())

        if not report.passed:
            raise CommandError(report.summary(), returncode=VERIFICATION_FAILED)
