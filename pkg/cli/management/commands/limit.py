from cli.services.base import PresentationCommand
from induce.services.limits import classical_limit
from presentation.services.render import render_presentation


class Command(PresentationCommand):
    help = 'Print the classical limit (parameter = 0) of a presentation in .hopf syntax'

    def run(self, triplet, config, **options):
        self.stdout.write(render_presentation(classical_limit(triplet)), ending='')
